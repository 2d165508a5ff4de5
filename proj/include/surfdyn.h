/* C API of the surfdyn shared library.
 *
 * All handles are opaque; every fallible call returns an sd_status and
 * leaves a message retrievable with sd_last_error() on the calling thread.
 * Strings returned through char** are heap-allocated and must be released
 * with sd_string_free().
 */
#ifndef SURFDYN_H
#define SURFDYN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SURFDYN_API __declspec(dllexport)
#else
#define SURFDYN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sd_status {
    SD_OK = 0,
    SD_ERR_INVALID_SPEC = 1,
    SD_ERR_PARSE = 2,
    SD_ERR_ARGUMENT = 3,
    SD_ERR_IO = 4,
    SD_ERR_INTERNAL = 5
} sd_status;

/* Combinatorial model of a surface diffeomorphism with one-dimensional
 * attractors and repellers. */
typedef struct sd_spec sd_spec;

SURFDYN_API const char* sd_version(void);

/* Message for the most recent failure on the calling thread; never NULL. */
SURFDYN_API const char* sd_last_error(void);

/* ---- spec lifecycle -------------------------------------------------- */

SURFDYN_API sd_status sd_spec_parse(const char* text, size_t len, sd_spec** out_spec);
SURFDYN_API void sd_spec_free(sd_spec* spec);

/* Canonical JSON form of the spec. */
SURFDYN_API sd_status sd_spec_serialize(const sd_spec* spec, char** out_json);
SURFDYN_API void sd_string_free(char* s);

/* ---- analysis --------------------------------------------------------- */

/* Always produces a report; *out_valid is 1 when no rule is violated. */
SURFDYN_API sd_status sd_spec_validate(const sd_spec* spec, int* out_valid,
                                       char** out_report_json);

/* Connected-sum decomposition as JSON; with_trace adds the surgery steps.
 * Fails with SD_ERR_INVALID_SPEC when the spec does not validate. */
SURFDYN_API sd_status sd_spec_decompose(const sd_spec* spec, int with_trace,
                                        char** out_json);

SURFDYN_API sd_status sd_spec_total_genus(const sd_spec* spec, int64_t* out_genus);

/* Graphviz DOT of the pairing multigraph. */
SURFDYN_API sd_status sd_spec_pairing_dot(const sd_spec* spec, char** out_dot);

/* Omega-/structural-stability verdict as JSON. */
SURFDYN_API sd_status sd_spec_stability(const sd_spec* spec, char** out_json);

/* Graphviz DOT of the prec-relation digraph. */
SURFDYN_API sd_status sd_spec_prec_dot(const sd_spec* spec, char** out_dot);

/* ---- spec construction ------------------------------------------------ */

/* name: "f1", "f2" or "pretzel". */
SURFDYN_API sd_status sd_example_spec(const char* name, sd_spec** out_spec);

/* Alternating path family realizing any total genus >= 2. */
SURFDYN_API sd_status sd_generate_for_genus(int64_t genus, sd_spec** out_spec);

/* Random valid spec, deterministic in seed. */
SURFDYN_API sd_status sd_generate_random(uint64_t seed, int32_t max_basic_sets,
                                         int32_t max_bunches_per_set,
                                         int32_t max_degree, sd_spec** out_spec);

/* ---- torus simulation -------------------------------------------------- */

typedef struct sd_da_params {
    int32_t linear_part[4]; /* row-major 2x2 integer matrix */
    double bump_radius;
    double push_strength;
} sd_da_params;

SURFDYN_API void sd_da_params_default(sd_da_params* params);

/* Fixed-point census as JSON. grid_n >= 64, newton_tol in (0, 1e-6]. */
SURFDYN_API sd_status sd_da_census(const sd_da_params* params, int32_t grid_n,
                                   double newton_tol, char** out_json);

/* Full phase portrait (attractor cloud, census glyphs, unstable manifolds)
 * as a standalone SVG document. */
SURFDYN_API sd_status sd_da_phase_portrait(const sd_da_params* params,
                                           int32_t n_samples, int32_t n_transient,
                                           uint64_t seed, int32_t grid_n,
                                           double newton_tol, int32_t arc_steps,
                                           int32_t n_iterates, char** out_svg);

#ifdef __cplusplus
}
#endif

#endif /* SURFDYN_H */
