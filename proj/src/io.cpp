#include "nilcortex/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nilcortex {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::size_t read_index(const json& v, std::size_t dim, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": index must be an integer");
  const auto raw = v.get<long long>();
  if (raw < 1 || static_cast<std::size_t>(raw) > dim)
    throw ParseError(where + ": index " + std::to_string(raw) + " outside 1.." + std::to_string(dim));
  return static_cast<std::size_t>(raw - 1);
}

Rational read_coefficient(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError(where + ": coefficient must be a rational string");
}

}  // namespace

LieAlgebra parse_structure_constants(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("structure-constants file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("structure-constants file: top level must be an object");
  for (const char* key : {"dim", "basis", "brackets"})
    if (!doc.contains(key)) throw ParseError(std::string("structure-constants file: missing \"") + key + "\"");

  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 0)
    throw ParseError("\"dim\" must be a non-negative integer");
  const auto dim = static_cast<std::size_t>(doc["dim"].get<long long>());

  const json& basis = doc["basis"];
  if (!basis.is_array() || basis.size() != dim)
    throw ParseError("\"basis\" must be a list of " + std::to_string(dim) + " labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!basis[i].is_string()) throw ParseError("basis[" + std::to_string(i) + "] must be a string");
    labels.push_back(basis[i].get<std::string>());
  }

  const json& brackets = doc["brackets"];
  if (!brackets.is_array()) throw ParseError("\"brackets\" must be a list");
  std::vector<BracketEntry> entries;
  for (std::size_t e = 0; e < brackets.size(); ++e) {
    const std::string where = "brackets[" + std::to_string(e) + "]";
    const json& b = brackets[e];
    if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("coeffs"))
      throw ParseError(where + ": expected {\"i\", \"j\", \"coeffs\"}");
    BracketEntry entry;
    entry.i = read_index(b["i"], dim, where + ".i");
    entry.j = read_index(b["j"], dim, where + ".j");
    if (!b["coeffs"].is_object()) throw ParseError(where + ".coeffs must be an object");
    for (const auto& [key, value] : b["coeffs"].items()) {
      std::size_t k = 0;
      try {
        std::size_t used = 0;
        const long long raw = std::stoll(key, &used);
        if (used != key.size() || raw < 1 || static_cast<std::size_t>(raw) > dim) throw std::out_of_range(key);
        k = static_cast<std::size_t>(raw - 1);
      } catch (const std::logic_error&) {
        throw ParseError(where + ".coeffs: bad basis index \"" + key + "\"");
      }
      entry.coeffs.emplace_back(k, read_coefficient(value, where + ".coeffs[" + key + "]"));
    }
    entries.push_back(std::move(entry));
  }
  try {
    return LieAlgebra(std::move(labels), std::move(entries));
  } catch (const ArgumentError& e) {
    throw ParseError(std::string("brackets: ") + e.what());
  }
}

std::string write_structure_constants(const LieAlgebra& alg) {
  ordered_json doc;
  doc["dim"] = alg.dim();
  doc["basis"] = alg.labels();
  doc["brackets"] = ordered_json::array();
  for (const auto& entry : alg.entries()) {
    ordered_json coeffs = ordered_json::object();
    for (const auto& [k, c] : entry.coeffs) coeffs[std::to_string(k + 1)] = to_string(c);
    ordered_json b;
    b["i"] = entry.i + 1;
    b["j"] = entry.j + 1;
    b["coeffs"] = std::move(coeffs);
    doc["brackets"].push_back(std::move(b));
  }
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LieAlgebra load_structure_constants(const std::filesystem::path& path) {
  try {
    return parse_structure_constants(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace nilcortex
