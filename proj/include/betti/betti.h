/*
 * betti - exact Betti diagram arithmetic, Boij-Soderberg decomposition, and
 * closed-form diagrams of secant varieties of genus-2 curves.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed here; every function that can fail returns a betti_status,
 * with a human-readable explanation available from betti_last_error() on the
 * calling thread. All numeric values cross this boundary as exact decimal
 * strings ("26", "-3", "7/13"); strings returned through char** out-params
 * are owned by the caller and released with betti_string_free().
 */

#ifndef BETTI_BETTI_H
#define BETTI_BETTI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BETTI_API __declspec(dllexport)
#else
#define BETTI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum betti_status {
  BETTI_OK = 0,
  BETTI_ERROR_INVALID_ARGUMENT = 1, /* precondition violated */
  BETTI_ERROR_PARSE = 2,            /* malformed serialized input */
  BETTI_ERROR_NOT_DIVISIBLE = 3,    /* numerator not divisible by (1-t)^pdim */
  BETTI_ERROR_NOT_IN_CONE = 4,      /* not a nonnegative pure combination */
  BETTI_ERROR_OVERLAP = 5,          /* removal sets of a secant sequence collide */
  BETTI_ERROR_INTERNAL = 6
} betti_status;

typedef enum betti_format {
  BETTI_FORMAT_JSON = 0,
  BETTI_FORMAT_CSV = 1,
  BETTI_FORMAT_TABLE = 2 /* render only */
} betti_format;

typedef struct betti_diagram betti_diagram;
typedef struct betti_decomposition betti_decomposition;
typedef struct betti_report betti_report;

BETTI_API const char* betti_version(void);

/* Message describing the most recent failure on this thread; never NULL.
 * Valid until the next failing call on the same thread. */
BETTI_API const char* betti_last_error(void);

BETTI_API void betti_string_free(char* text);

/* ---- diagrams ---------------------------------------------------------- */

/* Pure diagram of a strictly increasing degree sequence (length >= 2). */
BETTI_API betti_status betti_pure_diagram(const int64_t* entries, size_t count,
                                          betti_diagram** out);

/* Complete Betti diagram of the k-th secant variety of a genus-2 curve
 * embedded in P^r (line bundle degree r+2). Requires k >= 0, r >= 2k+3. */
BETTI_API betti_status betti_secant_diagram(int64_t k, int64_t r,
                                            betti_diagram** out);

/* Betti diagram of S/I for a squarefree monomial ideal, computed through
 * reduced simplicial homology of the Stanley-Reisner complex. The ideal
 * grammar accepts "x0*x2, x1*x3" or 0/1 exponent vectors "1010,0101". */
BETTI_API betti_status betti_hochster_diagram(int64_t nvars, const char* ideal,
                                              betti_diagram** out);

BETTI_API betti_status betti_diagram_parse(const char* text, betti_format fmt,
                                           betti_diagram** out);
BETTI_API betti_status betti_diagram_render(const betti_diagram* diagram,
                                            betti_format fmt, char** out);

/* Exact entry at column p, row q ("0" outside the support). */
BETTI_API betti_status betti_diagram_entry(const betti_diagram* diagram,
                                           int64_t p, int64_t q, char** out);

/* Multiplicity: the Hilbert numerator cleared by (1-t)^pdim, at t = 1. */
BETTI_API betti_status betti_diagram_multiplicity(const betti_diagram* diagram,
                                                  char** out);

BETTI_API void betti_diagram_free(betti_diagram* diagram);

/* ---- Boij-Soderberg decomposition -------------------------------------- */

/* Greedy top-strand decomposition into positive multiples of pure diagrams.
 * Fails with BETTI_ERROR_NOT_IN_CONE (residual shown by betti_last_error)
 * when the diagram is not a nonnegative combination. */
BETTI_API betti_status betti_diagram_decompose(const betti_diagram* diagram,
                                               betti_decomposition** out);

BETTI_API size_t betti_decomposition_term_count(
    const betti_decomposition* decomposition);

/* Raw coefficient of term `index`. */
BETTI_API betti_status betti_decomposition_coefficient(
    const betti_decomposition* decomposition, size_t index, char** out);

/* Coefficient divided by the coefficient total (multiplicity-one scale). */
BETTI_API betti_status betti_decomposition_normalized_coefficient(
    const betti_decomposition* decomposition, size_t index, char** out);

/* Degree sequence of term `index`, e.g. "0,3,4,7,8". */
BETTI_API betti_status betti_decomposition_sequence(
    const betti_decomposition* decomposition, size_t index, char** out);

/* Sum of the raw coefficients. */
BETTI_API betti_status betti_decomposition_total(
    const betti_decomposition* decomposition, char** out);

BETTI_API void betti_decomposition_free(betti_decomposition* decomposition);

/* ---- verification ------------------------------------------------------ */

/* Runs the full exact check bundle for one (k, r) grid point: integrality,
 * anchor values, strand closed form, multiplicity = degree, decomposition
 * recovery, vanishing shape, coefficient range. */
BETTI_API betti_status betti_verify(int64_t k, int64_t r, betti_report** out);

BETTI_API int betti_report_passed(const betti_report* report); /* 1 or 0 */
BETTI_API size_t betti_report_check_count(const betti_report* report);

/* Multi-line rendering: a summary line plus one line per check. */
BETTI_API betti_status betti_report_render(const betti_report* report,
                                           char** out);

BETTI_API void betti_report_free(betti_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BETTI_BETTI_H */
