/* C interface to the comeasure library: band operators on the graded span
 * of the monomials x^n, structure verification suites, central extension
 * cocycles, finite dual sequences, and oscillator module checks. All
 * arithmetic is exact; rationals cross the boundary as int64 num/den
 * pairs and overflow reports CM_ERANGE.
 *
 * Every function returning cm_status stores a message retrievable with
 * cm_last_error() on failure. Handles are freed with the matching
 * cm_*_free; passing NULL to a free function is a no-op.
 */
#ifndef COMEASURE_H
#define COMEASURE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CM_API __declspec(dllexport)
#else
#define CM_API __attribute__((visibility("default")))
#endif

typedef enum cm_status {
  CM_OK = 0,
  CM_CHECK_FAILED = 1, /* a law or axiom check failed; details in the report */
  CM_EINVAL = 2,       /* malformed input or unusable arguments */
  CM_EDIVERGENT = 3,   /* regularized trace undefined for this operator */
  CM_ERANGE = 4,       /* exact value does not fit int64 */
  CM_EINTERNAL = 5
} cm_status;

typedef struct cm_band cm_band;
typedef struct cm_structure cm_structure;
typedef struct cm_report cm_report;

CM_API const char* cm_version(void);
/* Message from the last failing call on this thread; empty if none. */
CM_API const char* cm_last_error(void);
CM_API void cm_string_free(char* s);

/* ---- band operators ---- */

/* x^n -> x^{n+offset}, truncated below degree zero. */
CM_API cm_status cm_band_shift(int offset, cm_band** out);
/* x^n -> n x^{n+offset}. */
CM_API cm_status cm_band_weighted_shift(int offset, cm_band** out);
CM_API cm_status cm_band_identity(cm_band** out);
CM_API cm_status cm_band_compose(const cm_band* f, const cm_band* g, cm_band** out);
CM_API cm_status cm_band_add(const cm_band* f, const cm_band* g, cm_band** out);
CM_API cm_status cm_band_sub(const cm_band* f, const cm_band* g, cm_band** out);
CM_API cm_status cm_band_scale(const cm_band* f, int64_t num, int64_t den, cm_band** out);
/* Regularized trace; CM_EDIVERGENT when undefined. */
CM_API cm_status cm_band_tau(const cm_band* f, int64_t* num, int64_t* den);
CM_API cm_status cm_band_equal(const cm_band* f, const cm_band* g, int* out);
CM_API void cm_band_free(cm_band* f);

/* ---- structures ---- */

CM_API cm_status cm_structure_load(const char* json_text, cm_structure** out);
CM_API cm_status cm_structure_builtin(const char* name, cm_structure** out);
CM_API cm_status cm_structure_kind(const cm_structure* s, char** out);
CM_API cm_status cm_structure_to_json(const cm_structure* s, char** out);
CM_API void cm_structure_free(cm_structure* s);

/* Suites: "coalgebra", "comodule", "connection". Returns CM_CHECK_FAILED
 * and a report carrying the witness when a law fails. */
CM_API cm_status cm_verify(const cm_structure* s, const char* suite, cm_report** out);

/* ---- cocycles ---- */

/* family: "heisenberg" or "virasoro". */
CM_API cm_status cm_cocycle(const char* family, int v, int w, int64_t* num, int64_t* den);
/* xi, psi: "e", "h", or "f". */
CM_API cm_status cm_loop_cocycle(int v, const char* xi, int w, const char* psi, int64_t* num,
                                 int64_t* den);
CM_API cm_status cm_killing_sl2(const char* xi, const char* psi, int64_t* out);

/* ---- finite dual ---- */

CM_API cm_status cm_dual_fibonacci(int n, int64_t* out);
/* builtin: "eval1", "geometric2", "fibonacci", "ramp". */
CM_API cm_status cm_dual_delta_pair(const char* builtin, int i, int j, int64_t* num, int64_t* den);

/* ---- oscillator module ---- */

/* which: "level", "restriction", "locally-finite". */
CM_API cm_status cm_fock_check(int level, int truncate, const char* which, cm_report** out);

/* ---- command driver ---- */

/* argv without a program name, e.g. {"cocycle", "--family", "virasoro",
 * "--v", "3", "--w", "-3"}. Always produces a report when it returns
 * CM_OK; *exit_code follows the CLI convention 0/1/2. */
CM_API cm_status cm_run(int argc, const char* const* argv, cm_report** out, int* exit_code);

/* ---- reports ---- */

CM_API cm_status cm_report_passed(const cm_report* r, int* out);
/* format: "json", "text", or NULL for the format the command requested. */
CM_API cm_status cm_report_render(const cm_report* r, const char* format, char** out);
CM_API void cm_report_free(cm_report* r);

#ifdef __cplusplus
}
#endif

#endif /* COMEASURE_H */
