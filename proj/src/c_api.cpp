#include "nilcortex/nilcortex.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "nilcortex/cortex.hpp"
#include "nilcortex/gd_family.hpp"
#include "nilcortex/io.hpp"
#include "nilcortex/report.hpp"

struct nc_algebra {
  nilcortex::LieAlgebra alg;
};

namespace {

using namespace nilcortex;

thread_local std::string g_last_error;

nc_status fail(nc_status s, const char* what) {
  g_last_error = what;
  return s;
}

template <class F>
nc_status guarded(F&& body) {
  try {
    body();
    return NC_OK;
  } catch (const ParseError& e) {
    return fail(NC_ERR_PARSE, e.what());
  } catch (const IoError& e) {
    return fail(NC_ERR_IO, e.what());
  } catch (const DimensionError& e) {
    return fail(NC_ERR_DIMENSION, e.what());
  } catch (const ArgumentError& e) {
    return fail(NC_ERR_ARGUMENT, e.what());
  } catch (const ClassError& e) {
    return fail(NC_ERR_CLASS, e.what());
  } catch (const OutOfLayerError& e) {
    return fail(NC_ERR_OUT_OF_LAYER, e.what());
  } catch (const MembershipError& e) {
    return fail(NC_ERR_NOT_ON_VARIETY, e.what());
  } catch (const DegenerateStratumError& e) {
    return fail(NC_ERR_DEGENERATE_STRATUM, e.what());
  } catch (const std::exception& e) {
    return fail(NC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NC_ERR_INTERNAL, "unknown exception");
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(const void* p, const char* name) {
  if (!p) throw ArgumentError(std::string(name) + " is NULL");
}

std::size_t to_d(int d) {
  if (d < 2) throw ArgumentError("g_d needs d >= 2, got " + std::to_string(d));
  return static_cast<std::size_t>(d);
}

RatVector parse_vec(const char* text, const char* name) {
  require(text, name);
  return parse_rational_list(text);
}

Format to_format(nc_format fmt) { return fmt == NC_FORMAT_RECORD ? Format::Record : Format::Text; }

void set_truth(int* truth, bool value) {
  if (truth) *truth = value ? 1 : 0;
}

}  // namespace

extern "C" {

const char* nc_status_name(nc_status status) {
  switch (status) {
    case NC_OK: return "ok";
    case NC_ERR_PARSE: return "parse error";
    case NC_ERR_IO: return "i/o error";
    case NC_ERR_DIMENSION: return "dimension error";
    case NC_ERR_ARGUMENT: return "argument error";
    case NC_ERR_CLASS: return "nilpotency class error";
    case NC_ERR_OUT_OF_LAYER: return "out of layer";
    case NC_ERR_NOT_ON_VARIETY: return "not on the cortex variety";
    case NC_ERR_DEGENERATE_STRATUM: return "degenerate stratum";
    case NC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* nc_last_error(void) { return g_last_error.c_str(); }

void nc_string_free(char* s) { std::free(s); }

nc_status nc_algebra_parse(const char* text, nc_algebra** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new nc_algebra{parse_structure_constants(text)};
  });
}

nc_status nc_algebra_load(const char* path, nc_algebra** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new nc_algebra{load_structure_constants(path)};
  });
}

nc_status nc_algebra_gd(int d, nc_algebra** out) {
  return guarded([&] {
    require(out, "out");
    *out = new nc_algebra{make_gd(to_d(d)).algebra};
  });
}

nc_status nc_algebra_heisenberg(nc_algebra** out) {
  return guarded([&] {
    require(out, "out");
    *out = new nc_algebra{heisenberg()};
  });
}

void nc_algebra_free(nc_algebra* alg) { delete alg; }

size_t nc_algebra_dim(const nc_algebra* alg) { return alg ? alg->alg.dim() : 0; }

nc_status nc_algebra_serialize(const nc_algebra* alg, char** out) {
  return guarded([&] {
    require(alg, "alg");
    require(out, "out");
    *out = dup_string(write_structure_constants(alg->alg));
  });
}

nc_status nc_algebra_validate(const nc_algebra* alg, int* jacobi_ok, int* nilpotency_class, size_t* center_dim) {
  return guarded([&] {
    require(alg, "alg");
    const ValidationReport rep = validate(alg->alg);
    if (jacobi_ok) *jacobi_ok = rep.jacobi_ok ? 1 : 0;
    if (nilpotency_class) *nilpotency_class = rep.nilpotency_class ? static_cast<int>(*rep.nilpotency_class) : -1;
    if (center_dim) *center_dim = center(alg->alg).dim();
  });
}

nc_status nc_ad_star(const nc_algebra* alg, const char* x, const char* covector, char** out) {
  return guarded([&] {
    require(alg, "alg");
    require(out, "out");
    *out = dup_string(to_string(ad_star(alg->alg, parse_vec(x, "x"), parse_vec(covector, "covector"))));
  });
}

nc_status nc_coadjoint_exp(const nc_algebra* alg, const char* x, const char* covector, char** out) {
  return guarded([&] {
    require(alg, "alg");
    require(out, "out");
    *out = dup_string(to_string(coadjoint_exp(alg->alg, parse_vec(x, "x"), parse_vec(covector, "covector"))));
  });
}

nc_status nc_orbit_dimension(const nc_algebra* alg, const char* covector, size_t* out) {
  return guarded([&] {
    require(alg, "alg");
    require(out, "out");
    *out = orbit_dimension(alg->alg, parse_vec(covector, "covector"));
  });
}

nc_status nc_jump_indices(const nc_algebra* alg, const char* covector, size_t* positions, size_t capacity,
                          size_t* count) {
  return guarded([&] {
    require(alg, "alg");
    require(count, "count");
    const JumpIndexSet jumps = jump_indices(alg->alg, parse_vec(covector, "covector"));
    *count = jumps.size();
    if (capacity > 0) require(positions, "positions");
    for (std::size_t i = 0; i < jumps.size() && i < capacity; ++i) positions[i] = jumps.positions[i];
  });
}

nc_status nc_cortex_member_gd(int d, const char* covector, int* member) {
  return guarded([&] {
    require(member, "member");
    *member = cortex_membership_gd(to_d(d), parse_vec(covector, "covector")) ? 1 : 0;
  });
}

nc_status nc_icor_member_gd(int d, const char* covector, int* member) {
  return guarded([&] {
    require(member, "member");
    const std::size_t dd = to_d(d);
    const RatVector ell = parse_vec(covector, "covector");
    if (ell.size() != 4 * dd) throw DimensionError("g_d covector must have length " + std::to_string(4 * dd));
    *member = icor_membership(invariant_generators(dd), ell) ? 1 : 0;
  });
}

nc_status nc_cross_section_gd(int d, const char* covector, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup_string(to_string(cross_section_map(to_d(d), parse_vec(covector, "covector"))));
  });
}

nc_status nc_cortex_poly_gd(int d, char** out) {
  return guarded([&] {
    require(out, "out");
    const std::size_t dd = to_d(d);
    *out = dup_string(cortex_poly(dd).to_string(gd_coordinate_names(dd)));
  });
}

nc_status nc_report_validate(const nc_algebra* alg, nc_format fmt, char** out, int* truth) {
  return guarded([&] {
    require(alg, "alg");
    require(out, "out");
    const Rendered r = report_validate(alg->alg, to_format(fmt));
    *out = dup_string(r.text);
    set_truth(truth, r.truth);
  });
}

nc_status nc_report_orbit(const nc_algebra* alg, const char* covector, nc_format fmt, char** out) {
  return guarded([&] {
    require(alg, "alg");
    require(out, "out");
    *out = dup_string(report_orbit(alg->alg, parse_vec(covector, "covector"), to_format(fmt)));
  });
}

nc_status nc_report_jump(const nc_algebra* alg, const char* covector, nc_format fmt, char** out) {
  return guarded([&] {
    require(alg, "alg");
    require(out, "out");
    *out = dup_string(report_jump(alg->alg, parse_vec(covector, "covector"), to_format(fmt)));
  });
}

nc_status nc_report_invariants(int d, nc_format fmt, char** out, int* truth) {
  return guarded([&] {
    require(out, "out");
    const Rendered r = report_invariants(to_d(d), to_format(fmt));
    *out = dup_string(r.text);
    set_truth(truth, r.truth);
  });
}

nc_status nc_report_cortex_test(int d, const char* covector, nc_format fmt, char** out, int* truth) {
  return guarded([&] {
    require(out, "out");
    const Rendered r = report_cortex_test(to_d(d), parse_vec(covector, "covector"), to_format(fmt));
    *out = dup_string(r.text);
    set_truth(truth, r.truth);
  });
}

nc_status nc_report_witness(int d, const char* target, const char* epsilons, nc_format fmt, char** out) {
  return guarded([&] {
    require(out, "out");
    const auto schedule = witness_sequence(to_d(d), parse_vec(target, "target"), parse_vec(epsilons, "epsilons"));
    *out = dup_string(report_witness(schedule, to_format(fmt)));
  });
}

nc_status nc_report_perturbed_witness(int d, const char* target, const char* etas, const char* epsilons,
                                      nc_format fmt, char** out) {
  return guarded([&] {
    require(out, "out");
    const auto w = perturbed_witness(to_d(d), parse_vec(target, "target"), parse_vec(etas, "etas"),
                                     parse_vec(epsilons, "epsilons"));
    *out = dup_string(report_perturbed_witness(w, to_format(fmt)));
  });
}

nc_status nc_report_classify(const nc_algebra* alg, size_t trials, uint64_t seed, nc_format fmt, char** out,
                             int* truth) {
  return guarded([&] {
    require(alg, "alg");
    require(out, "out");
    const Rendered r = report_classify(codim_classifier(alg->alg, trials, seed), to_format(fmt));
    *out = dup_string(r.text);
    set_truth(truth, r.truth);
  });
}

nc_status nc_report_cross_section(int d, const char* covector, nc_format fmt, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup_string(report_cross_section(to_d(d), parse_vec(covector, "covector"), to_format(fmt)));
  });
}

nc_status nc_report_cortex_poly(int d, nc_format fmt, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup_string(report_cortex_poly(to_d(d), to_format(fmt)));
  });
}

void nc_cloud_options_default(nc_cloud_options* options) {
  if (!options) return;
  const CloudOptions defaults;
  options->samples = defaults.samples;
  options->seed = defaults.seed;
  options->scales = nullptr;
  options->scale_count = 0;
  options->window_lo = defaults.window_lo;
  options->window_hi = defaults.window_hi;
  options->ball_radius = defaults.ball_radius;
  options->threads = defaults.threads;
}

nc_status nc_cloud_csv(const nc_algebra* alg, const nc_cloud_options* options, char** out, size_t* points) {
  return guarded([&] {
    require(alg, "alg");
    require(options, "options");
    require(out, "out");
    CloudOptions opts;
    opts.samples = options->samples;
    opts.seed = options->seed;
    if (options->scales && options->scale_count > 0)
      opts.scales.assign(options->scales, options->scales + options->scale_count);
    opts.window_lo = options->window_lo;
    opts.window_hi = options->window_hi;
    opts.ball_radius = options->ball_radius;
    opts.threads = options->threads;
    const PointCloud cloud = approximate_cortex(alg->alg, opts);
    *out = dup_string(cloud_csv(cloud));
    if (points) *points = cloud.points.size();
  });
}

}  // extern "C"
