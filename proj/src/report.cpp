#include "nilcortex/report.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "nilcortex/gd_family.hpp"

namespace nilcortex {

namespace {

using Record = nlohmann::ordered_json;

constexpr const char* kCheck = "\xE2\x9C\x93";  // U+2713
constexpr const char* kCross = "\xE2\x9C\x97";  // U+2717

const char* mark(bool ok) { return ok ? kCheck : kCross; }

std::string tuple(std::span<const Rational> v) { return "(" + to_string(v, ",") + ")"; }

Record rational_list(std::span<const Rational> v) {
  Record out = Record::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

std::string dump(const Record& r) { return r.dump(2) + "\n"; }

std::string positions_text(const JumpIndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.positions.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s.positions[i]);
  }
  return out + "}";
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, end);
}

Rendered report_validate(const LieAlgebra& alg, Format fmt) {
  const ValidationReport rep = validate(alg);
  const Subspace z = center(alg);
  Rendered out;
  out.truth = rep.two_step();

  if (fmt == Format::Record) {
    Record r;
    r["command"] = "validate";
    r["dim"] = alg.dim();
    r["jacobi"] = rep.jacobi_ok;
    r["jacobi_witness"] = rep.jacobi_witness ? Record(*rep.jacobi_witness) : Record(nullptr);
    r["nilpotency_class"] = rep.nilpotency_class ? Record(*rep.nilpotency_class) : Record(nullptr);
    r["two_step"] = out.truth;
    r["center_dim"] = z.dim();
    r["center"] = Record::array();
    for (const auto& v : z.basis()) r["center"].push_back(rational_list(v));
    out.text = dump(r);
    return out;
  }

  std::ostringstream os;
  os << "dimension: " << alg.dim() << "\n";
  if (rep.jacobi_ok) {
    os << "jacobi: pass\n";
  } else {
    const auto& w = *rep.jacobi_witness;
    os << "jacobi: FAIL at (" << w[0] << ", " << w[1] << ", " << w[2] << ")\n";
  }
  os << "nilpotency class: " << (rep.nilpotency_class ? std::to_string(*rep.nilpotency_class) : "none") << "\n";
  os << "two-step: " << (out.truth ? "yes" : "no") << "\n";
  os << "center: dim " << z.dim() << "\n";
  for (const auto& v : z.basis()) os << "  " << tuple(v) << "\n";
  out.text = os.str();
  return out;
}

std::string report_orbit(const LieAlgebra& alg, std::span<const Rational> ell, Format fmt) {
  const Subspace t = tangent_space(alg, ell);
  const std::size_t dim = orbit_dimension(alg, ell);
  if (fmt == Format::Record) {
    Record r;
    r["command"] = "orbit";
    r["covector"] = rational_list(ell);
    r["orbit_dimension"] = dim;
    r["tangent_space"] = Record::array();
    for (const auto& v : t.basis()) r["tangent_space"].push_back(rational_list(v));
    return dump(r);
  }
  std::ostringstream os;
  os << "orbit dimension: " << dim << "\n";
  os << "tangent space basis:\n";
  for (const auto& v : t.basis()) os << "  " << tuple(v) << "\n";
  return os.str();
}

std::string report_jump(const LieAlgebra& alg, std::span<const Rational> ell, Format fmt) {
  const JumpIndexSet jumps = jump_indices(alg, ell);
  if (fmt == Format::Record) {
    Record r;
    r["command"] = "jump";
    r["covector"] = rational_list(ell);
    r["jump_indices"] = jumps.positions;
    Record labels = Record::array();
    for (auto p : jumps.positions) labels.push_back(alg.labels()[p - 1]);
    r["labels"] = std::move(labels);
    return dump(r);
  }
  std::ostringstream os;
  os << "jump indices: " << positions_text(jumps) << "\n";
  os << "labels:";
  for (auto p : jumps.positions) os << " " << alg.labels()[p - 1];
  os << "\n";
  return os.str();
}

Rendered report_invariants(std::size_t d, Format fmt) {
  const GdDescriptor gd = make_gd(d);
  const auto names = gd_coordinate_names(d);
  const auto gens = invariant_generators(d);
  Rendered out;

  Record list = Record::array();
  std::ostringstream os;
  os << "invariant generators of g_" << d << " (" << gens.size() << "):\n";
  for (const auto& g : gens) {
    bool vanish = true;
    for (std::size_t b = 0; b < gd.algebra.dim() && vanish; ++b)
      vanish = coadjoint_derivation(gd.algebra, g, b).is_zero();
    out.truth = out.truth && vanish;
    os << "  " << g.to_string(names) << "   " << mark(vanish) << "\n";
    Record item;
    item["polynomial"] = g.to_string(names);
    item["derivations_vanish"] = vanish;
    list.push_back(std::move(item));
  }
  os << "all derivations vanish: " << mark(out.truth) << "\n";

  if (fmt == Format::Record) {
    Record r;
    r["command"] = "invariants";
    r["d"] = d;
    r["generators"] = std::move(list);
    r["all_derivations_vanish"] = out.truth;
    out.text = dump(r);
  } else {
    out.text = os.str();
  }
  return out;
}

Rendered report_cortex_test(std::size_t d, std::span<const Rational> ell, Format fmt) {
  const GdLayout at{d};
  const SparsePoly q = cortex_poly(d);
  const Rational value = q.eval(ell);
  bool z_zero = true;
  for (std::size_t i = 1; i <= d; ++i) z_zero = z_zero && sgn(ell[at.z(i)]) == 0;
  const auto gens = invariant_generators(d);
  const bool icor = icor_membership(gens, ell);

  Rendered out;
  out.truth = cortex_membership_gd(d, ell);
  if (fmt == Format::Record) {
    Record r;
    r["command"] = "cortex-test";
    r["d"] = d;
    r["covector"] = rational_list(ell);
    r["member"] = out.truth;
    r["z_zero"] = z_zero;
    r["q_value"] = to_string(value);
    r["icor_member"] = icor;
    out.text = dump(r);
    return out;
  }
  std::ostringstream os;
  os << (out.truth ? "MEMBER" : "NON-MEMBER") << ": z=0 " << mark(z_zero) << ", Q_" << d << " = "
     << to_string(value) << " " << mark(sgn(value) == 0) << "\n";
  os << "ICor (all invariants vanish): " << mark(icor) << "\n";
  out.text = os.str();
  return out;
}

std::string report_witness(const WitnessSchedule& schedule, Format fmt) {
  const GdLayout at{schedule.d};
  auto z_part = [&](const Covector& v) {
    return std::span<const Rational>(v).subspan(at.z(1), schedule.d);
  };
  auto rest_exact = [&](const WitnessStep& s) {
    return is_zero(std::span<const Rational>(s.residual).subspan(schedule.d));
  };

  if (fmt == Format::Record) {
    Record r;
    r["command"] = "witness";
    r["d"] = schedule.d;
    r["target"] = rational_list(schedule.target);
    r["steps"] = Record::array();
    for (const auto& s : schedule.steps) {
      Record row;
      row["epsilon"] = to_string(s.epsilon);
      row["start"] = rational_list(s.start);
      row["generator"] = rational_list(s.generator);
      row["image"] = rational_list(s.image);
      row["z_residual"] = rational_list(z_part(s.residual));
      row["yx_exact"] = rest_exact(s);
      row["start_norm"] = to_string(max_abs(s.start));
      row["bound"] = to_string(s.bound);
      r["steps"].push_back(std::move(row));
    }
    return dump(r);
  }
  std::ostringstream os;
  os << "target: " << tuple(schedule.target) << "\n";
  os << "epsilon | z-residual | max|l(eps)| | bound | y,x exact\n";
  for (const auto& s : schedule.steps)
    os << to_string(s.epsilon) << " | " << tuple(z_part(s.residual)) << " | " << to_string(max_abs(s.start))
       << " | " << to_string(s.bound) << " | " << mark(rest_exact(s)) << "\n";
  return os.str();
}

std::string report_perturbed_witness(const PerturbedWitness& witness, Format fmt) {
  if (fmt == Format::Record) {
    Record r;
    r["command"] = "witness";
    r["mode"] = "perturbed";
    r["d"] = witness.d;
    r["target"] = rational_list(witness.target);
    r["steps"] = Record::array();
    for (const auto& s : witness.steps) {
      Record row;
      row["eta"] = to_string(s.eta);
      row["epsilon"] = to_string(s.epsilon);
      row["perturbed_target"] = rational_list(s.perturbed_target);
      row["start_norm"] = to_string(s.start_norm);
      row["distance"] = to_string(s.distance);
      row["distance_approx"] = format_double(s.distance.get_d());
      r["steps"].push_back(std::move(row));
    }
    return dump(r);
  }
  std::ostringstream os;
  os << "target: " << tuple(witness.target) << " (degenerate stratum, perturbed schedule)\n";
  os << "eta | epsilon | max|l(eps)| | max|image - target| (approx)\n";
  for (const auto& s : witness.steps)
    os << to_string(s.eta) << " | " << to_string(s.epsilon) << " | " << to_string(s.start_norm) << " | "
       << to_string(s.distance) << " (" << format_double(s.distance.get_d()) << ")\n";
  return os.str();
}

Rendered report_classify(const ClassifierReport& rep, Format fmt) {
  Rendered out;
  out.truth = rep.cor_equals_z_perp;
  if (fmt == Format::Record) {
    Record r;
    r["command"] = "classify";
    r["dim"] = rep.dim;
    r["center_dim"] = rep.center_dim;
    r["z_perp_dim"] = rep.z_perp_dim;
    r["trials"] = rep.trials;
    r["generic_orbit_dim"] = rep.generic_orbit_dim;
    r["min_orbit_dim"] = rep.min_orbit_dim;
    r["codim"] = rep.codim;
    r["all_sampled_codim_le_1"] = rep.all_sampled_codim_le_1;
    r["cor_equals_z_perp"] = rep.cor_equals_z_perp;
    r["verdict"] = rep.verdict;
    out.text = dump(r);
    return out;
  }
  std::ostringstream os;
  os << "dim g: " << rep.dim << ", dim z: " << rep.center_dim << ", dim z^perp: " << rep.z_perp_dim << "\n";
  os << "orbit dimension over " << rep.trials << " samples: generic " << rep.generic_orbit_dim << ", min "
     << rep.min_orbit_dim << "\n";
  os << "codim of generic orbits in z^perp: " << rep.codim << "\n";
  os << "every sampled orbit has codim <= 1: " << (rep.all_sampled_codim_le_1 ? "yes" : "no") << "\n";
  os << "verdict: " << rep.verdict << "\n";
  out.text = os.str();
  return out;
}

std::string report_cross_section(std::size_t d, std::span<const Rational> ell, Format fmt) {
  const Covector p = cross_section_map(d, ell);
  const JumpIndexSet jumps = expected_jump_set(d);
  bool off_jumps = true;
  for (auto pos : jumps.positions) off_jumps = off_jumps && sgn(p[pos - 1]) == 0;
  if (fmt == Format::Record) {
    Record r;
    r["command"] = "cross-section";
    r["d"] = d;
    r["covector"] = rational_list(ell);
    r["cross_section"] = rational_list(p);
    r["off_jump_indices"] = off_jumps;
    return dump(r);
  }
  std::ostringstream os;
  os << "P_" << d << "(l) = " << tuple(p) << "\n";
  os << "supported off jump indices " << positions_text(jumps) << ": " << mark(off_jumps) << "\n";
  return os.str();
}

std::string report_cortex_poly(std::size_t d, Format fmt) {
  const SparsePoly q = cortex_poly(d);
  const auto names = gd_coordinate_names(d);
  if (fmt == Format::Record) {
    Record r;
    r["command"] = "qd";
    r["d"] = d;
    r["polynomial"] = q.to_string(names);
    r["degree"] = q.degree();
    r["terms"] = q.term_count();
    return dump(r);
  }
  return "Q_" + std::to_string(d) + " = " + q.to_string(names) + "\n";
}

std::string cloud_csv(const PointCloud& cloud) {
  std::string out;
  for (const auto& p : cloud.points) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out += ",";
      out += format_double(p[i]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace nilcortex
