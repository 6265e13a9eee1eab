/*
 * C interface to the nilcortex library.
 *
 * Algebras are opaque handles owned by the caller (release with
 * nc_algebra_free). Covectors, epsilon schedules and other exact inputs
 * travel as comma-separated rational strings ("1/2,-3,0"). Strings returned
 * through char** out-parameters are allocated by the library and must be
 * released with nc_string_free.
 *
 * Every call returns an nc_status; on failure nc_last_error() describes the
 * problem (thread-local, valid until the next failing call on that thread).
 */
#ifndef NILCORTEX_H
#define NILCORTEX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define NC_API __declspec(dllexport)
#else
#  define NC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nc_status {
  NC_OK = 0,
  NC_ERR_PARSE = 1,
  NC_ERR_IO = 2,
  NC_ERR_DIMENSION = 3,
  NC_ERR_ARGUMENT = 4,
  NC_ERR_CLASS = 5,
  NC_ERR_OUT_OF_LAYER = 6,
  NC_ERR_NOT_ON_VARIETY = 7,
  NC_ERR_DEGENERATE_STRATUM = 8,
  NC_ERR_INTERNAL = 9
} nc_status;

typedef enum nc_format {
  NC_FORMAT_TEXT = 0,
  NC_FORMAT_RECORD = 1 /* JSON */
} nc_format;

typedef struct nc_algebra nc_algebra;

typedef struct nc_cloud_options {
  size_t samples;
  uint64_t seed;
  const double* scales; /* NULL: library default schedule */
  size_t scale_count;
  double window_lo;
  double window_hi;
  double ball_radius;
  unsigned threads; /* 0: hardware concurrency */
} nc_cloud_options;

NC_API const char* nc_status_name(nc_status status);
NC_API const char* nc_last_error(void);
NC_API void nc_string_free(char* s);

/* algebras */
NC_API nc_status nc_algebra_parse(const char* text, nc_algebra** out);
NC_API nc_status nc_algebra_load(const char* path, nc_algebra** out);
NC_API nc_status nc_algebra_gd(int d, nc_algebra** out);
NC_API nc_status nc_algebra_heisenberg(nc_algebra** out);
NC_API void nc_algebra_free(nc_algebra* alg);
NC_API size_t nc_algebra_dim(const nc_algebra* alg);
NC_API nc_status nc_algebra_serialize(const nc_algebra* alg, char** out);
/* nilpotency_class is -1 when the lower central series does not terminate */
NC_API nc_status nc_algebra_validate(const nc_algebra* alg, int* jacobi_ok, int* nilpotency_class,
                                     size_t* center_dim);

/* coadjoint geometry */
NC_API nc_status nc_ad_star(const nc_algebra* alg, const char* x, const char* covector, char** out);
NC_API nc_status nc_coadjoint_exp(const nc_algebra* alg, const char* x, const char* covector, char** out);
NC_API nc_status nc_orbit_dimension(const nc_algebra* alg, const char* covector, size_t* out);
/* writes up to `capacity` 1-based positions; *count receives the full size */
NC_API nc_status nc_jump_indices(const nc_algebra* alg, const char* covector, size_t* positions,
                                 size_t capacity, size_t* count);

/* g_d family and cortex */
NC_API nc_status nc_cortex_member_gd(int d, const char* covector, int* member);
NC_API nc_status nc_icor_member_gd(int d, const char* covector, int* member);
NC_API nc_status nc_cross_section_gd(int d, const char* covector, char** out);
NC_API nc_status nc_cortex_poly_gd(int d, char** out);

/* reports; `truth` (may be NULL) receives the command's truth value */
NC_API nc_status nc_report_validate(const nc_algebra* alg, nc_format fmt, char** out, int* truth);
NC_API nc_status nc_report_orbit(const nc_algebra* alg, const char* covector, nc_format fmt, char** out);
NC_API nc_status nc_report_jump(const nc_algebra* alg, const char* covector, nc_format fmt, char** out);
NC_API nc_status nc_report_invariants(int d, nc_format fmt, char** out, int* truth);
NC_API nc_status nc_report_cortex_test(int d, const char* covector, nc_format fmt, char** out, int* truth);
NC_API nc_status nc_report_witness(int d, const char* target, const char* epsilons, nc_format fmt, char** out);
NC_API nc_status nc_report_perturbed_witness(int d, const char* target, const char* etas, const char* epsilons,
                                             nc_format fmt, char** out);
NC_API nc_status nc_report_classify(const nc_algebra* alg, size_t trials, uint64_t seed, nc_format fmt,
                                    char** out, int* truth);
NC_API nc_status nc_report_cross_section(int d, const char* covector, nc_format fmt, char** out);
NC_API nc_status nc_report_cortex_poly(int d, nc_format fmt, char** out);

/* floating point-cloud approximation of the cortex, as CSV */
NC_API void nc_cloud_options_default(nc_cloud_options* options);
NC_API nc_status nc_cloud_csv(const nc_algebra* alg, const nc_cloud_options* options, char** out,
                              size_t* points);

#ifdef __cplusplus
}
#endif

#endif /* NILCORTEX_H */
