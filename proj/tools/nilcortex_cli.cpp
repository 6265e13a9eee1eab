// nilcortex command-line tool. Talks to the library only through the C API.
//
// Exit status: 0 success / true, 1 domain-negative or domain error,
// 2 usage, parse or i/o error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nilcortex/nilcortex.h"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out;
};

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { nc_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct AlgebraDeleter {
  void operator()(nc_algebra* a) const { nc_algebra_free(a); }
};
using AlgebraPtr = std::unique_ptr<nc_algebra, AlgebraDeleter>;

int status_exit(nc_status s) {
  std::cerr << "error (" << nc_status_name(s) << "): " << nc_last_error() << "\n";
  return (s == NC_ERR_PARSE || s == NC_ERR_IO) ? kExitUsage : kExitFalse;
}

// Raised inside command handlers and turned into an exit status by main.
struct StatusFailure {
  nc_status status;
};

void check(nc_status s) {
  if (s != NC_OK) throw StatusFailure{s};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "a,b,c" inline, or "@path" with entries separated by commas or whitespace
std::string rational_list_arg(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::string text = read_file(arg.substr(1));
  for (auto& c : text)
    if (c == '\n' || c == '\r' || c == '\t' || c == ' ') c = ',';
  std::string out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    if (!out.empty()) out += ",";
    out += item;
  }
  return out;
}

// structure-constants file, or one of the built-ins "gd:<d>", "heisenberg"
AlgebraPtr load_algebra(const std::string& spec) {
  nc_algebra* raw = nullptr;
  if (spec.rfind("gd:", 0) == 0) {
    int d = 0;
    try {
      d = std::stoi(spec.substr(3));
    } catch (const std::exception&) {
      throw UsageError("bad built-in algebra '" + spec + "'");
    }
    check(nc_algebra_gd(d, &raw));
  } else if (spec == "heisenberg") {
    check(nc_algebra_heisenberg(&raw));
  } else {
    check(nc_algebra_load(spec.c_str(), &raw));
  }
  return AlgebraPtr(raw);
}

nc_format report_format(const Globals& g) {
  if (g.format == "text") return NC_FORMAT_TEXT;
  if (g.format == "record") return NC_FORMAT_RECORD;
  throw UsageError("format '" + g.format + "' is not available for this command (text | record)");
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream os(g.out, std::ios::binary);
  if (!os) throw UsageError("cannot write " + g.out);
  os << text;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coadjoint geometry and cortex of two-step nilpotent Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Random seed (default 0)");
  app.add_option("--format", g.format, "Output format: text | record | csv")
      ->check(CLI::IsMember({"text", "record", "csv"}));
  app.add_option("--out", g.out, "Write output to this file instead of stdout");

  int d = 0;
  std::string file, ell, target, epsilons, etas = "1/10,1/100,1/1000";
  bool perturb = false;
  std::size_t trials = 200;
  std::size_t samples = 10000;
  std::string scales, window = "0.5,2.0";
  double ball_radius = 2.0;

  auto* gd = app.add_subcommand("gd", "Write the structure constants of g_d");
  gd->add_option("d", d, "d >= 2")->required();

  auto* validate = app.add_subcommand("validate", "Jacobi identity, nilpotency class and center");
  validate->add_option("file", file, "Structure-constants file, gd:<d> or heisenberg")->required();

  auto* orbit = app.add_subcommand("orbit", "Orbit dimension and tangent space at a covector");
  orbit->add_option("file", file)->required();
  orbit->add_option("covector", ell, "Comma-separated rationals or @path")->required();

  auto* jump = app.add_subcommand("jump", "Jump indices of the skew form at a covector");
  jump->add_option("file", file)->required();
  jump->add_option("covector", ell)->required();

  auto* invariants = app.add_subcommand("invariants", "Invariant generators of g_d and their derivations");
  invariants->add_option("d", d)->required();

  auto* qd = app.add_subcommand("qd", "The cortex polynomial Q_d");
  qd->add_option("d", d)->required();

  auto* cortex_test = app.add_subcommand("cortex-test", "Exact cortex membership for g_d");
  cortex_test->add_option("d", d)->required();
  cortex_test->add_option("covector", ell)->required();

  auto* witness = app.add_subcommand("witness", "Witness sequence converging to a cortex point of g_d");
  witness->add_option("d", d)->required();
  witness->add_option("target", target)->required();
  witness->add_option("epsilons", epsilons, "Comma-separated positive rationals")->required();
  witness->add_flag("--perturb", perturb, "Perturbed two-parameter schedule for degenerate targets");
  witness->add_option("--etas", etas, "Perturbation sizes for --perturb");

  auto* cloud = app.add_subcommand("cloud", "Floating point-cloud approximation of the cortex (CSV)");
  cloud->add_option("file", file)->required();
  cloud->add_option("--samples", samples);
  cloud->add_option("--scales", scales, "Comma-separated scale schedule");
  cloud->add_option("--window", window, "Norm window lo,hi");
  cloud->add_option("--ball-radius", ball_radius);

  auto* classify = app.add_subcommand("classify", "Codimension 0/1 classifier");
  classify->add_option("file", file)->required();
  classify->add_option("--trials", trials);

  auto* cross = app.add_subcommand("cross-section", "Cross-section map of the generic layer of g_d");
  cross->add_option("d", d)->required();
  cross->add_option("covector", ell)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    OwnedString s;
    int truth = 1;

    if (*gd) {
      AlgebraPtr alg;
      nc_algebra* raw = nullptr;
      check(nc_algebra_gd(d, &raw));
      alg.reset(raw);
      check(nc_algebra_serialize(alg.get(), &s.p));
    } else if (*validate) {
      const auto alg = load_algebra(file);
      check(nc_report_validate(alg.get(), report_format(g), &s.p, &truth));
    } else if (*orbit) {
      const auto alg = load_algebra(file);
      check(nc_report_orbit(alg.get(), rational_list_arg(ell).c_str(), report_format(g), &s.p));
    } else if (*jump) {
      const auto alg = load_algebra(file);
      check(nc_report_jump(alg.get(), rational_list_arg(ell).c_str(), report_format(g), &s.p));
    } else if (*invariants) {
      check(nc_report_invariants(d, report_format(g), &s.p, &truth));
    } else if (*qd) {
      check(nc_report_cortex_poly(d, report_format(g), &s.p));
    } else if (*cortex_test) {
      check(nc_report_cortex_test(d, rational_list_arg(ell).c_str(), report_format(g), &s.p, &truth));
    } else if (*witness) {
      const std::string t = rational_list_arg(target);
      const std::string e = rational_list_arg(epsilons);
      if (perturb)
        check(nc_report_perturbed_witness(d, t.c_str(), rational_list_arg(etas).c_str(), e.c_str(), report_format(g),
                                          &s.p));
      else
        check(nc_report_witness(d, t.c_str(), e.c_str(), report_format(g), &s.p));
    } else if (*cloud) {
      if (g.format == "record") throw UsageError("cloud output is CSV only");
      const auto alg = load_algebra(file);
      nc_cloud_options opts;
      nc_cloud_options_default(&opts);
      opts.samples = samples;
      opts.seed = g.seed;
      opts.ball_radius = ball_radius;
      const std::vector<double> sched = scales.empty() ? std::vector<double>{} : parse_doubles(scales);
      opts.scales = sched.empty() ? nullptr : sched.data();
      opts.scale_count = sched.size();
      const auto win = parse_doubles(window);
      if (win.size() != 2) throw UsageError("--window needs lo,hi");
      opts.window_lo = win[0];
      opts.window_hi = win[1];
      check(nc_cloud_csv(alg.get(), &opts, &s.p, nullptr));
    } else if (*classify) {
      const auto alg = load_algebra(file);
      check(nc_report_classify(alg.get(), trials, g.seed, report_format(g), &s.p, &truth));
    } else if (*cross) {
      check(nc_report_cross_section(d, rational_list_arg(ell).c_str(), report_format(g), &s.p));
    }

    emit(g, s.str());
    return truth ? kExitTrue : kExitFalse;
  } catch (const StatusFailure& f) {
    return status_exit(f.status);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}
