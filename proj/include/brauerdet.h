/*
 * brauerdet - exact expansion of structured symbolic determinants over
 * Brauer diagrams.
 *
 * C interface to the shared library. All functions return a bd_status;
 * results come back through out-parameters. Objects are opaque handles
 * released with their bd_*_free function, strings returned through char**
 * are heap-allocated and released with bd_string_free. Handles are
 * immutable once created and may be shared across threads.
 */

#ifndef BRAUERDET_H
#define BRAUERDET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BD_API __declspec(dllexport)
#else
#define BD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bd_status {
    BD_OK = 0,
    BD_ERR_INVALID_ARGUMENT = 1, /* violated precondition (bad n, bad term, ...) */
    BD_ERR_OUT_OF_RANGE = 2,     /* index or size beyond supported bounds */
    BD_ERR_PARSE = 3,            /* malformed JSON input */
    BD_ERR_INTERNAL = 4
} bd_status;

typedef enum bd_variant {
    BD_VARIANT_F = 0, /* bottom row labeled left to right; matrix A + B */
    BD_VARIANT_B = 1  /* bottom row labeled right to left; matrix A + I*B */
} bd_variant;

typedef struct bd_diagram bd_diagram; /* Brauer diagram (perfect matching) */
typedef struct bd_poly bd_poly;       /* multivariate polynomial over Z[I] */
typedef struct bd_report bd_report;   /* result of a verification run */

BD_API const char* bd_version(void);
BD_API const char* bd_status_message(bd_status status);
BD_API void bd_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Diagrams                                                            */
/* ------------------------------------------------------------------ */

/* (2n-1)!!, the number of diagrams of size n. */
BD_API bd_status bd_diagram_count(uint32_t n, uint64_t* out);

/* Diagram at `index` in the deterministic enumeration order. */
BD_API bd_status bd_diagram_from_index(uint32_t n, uint64_t index, bd_diagram** out);

/* Parses {"n": n, "edges": [[v,w],...]} with 1-based vertex positions. */
BD_API bd_status bd_diagram_from_json(const char* json, bd_diagram** out);

BD_API void bd_diagram_free(bd_diagram* d);
BD_API uint32_t bd_diagram_size(const bd_diagram* d);
BD_API uint64_t bd_diagram_crossing_number(const bd_diagram* d);
BD_API bd_status bd_diagram_to_json(const bd_diagram* d, char** out);

/* Weight monomial under the given labeling, in canonical text form. */
BD_API bd_status bd_diagram_weight(const bd_diagram* d, bd_variant labeling, char** out);

/* Expansion term of the diagram as JSON:
 * {"cycles": [[...],...], "b_transitions": [[cycle_idx, pos_idx],...]}. */
BD_API bd_status bd_diagram_term_json(const bd_diagram* d, bd_variant labeling, char** out);

/* SVG picture with labels drawn per the labeling. */
BD_API bd_status bd_diagram_render_svg(const bd_diagram* d, bd_variant labeling, char** out);

/* ------------------------------------------------------------------ */
/* Polynomials                                                         */
/* ------------------------------------------------------------------ */

/* Leibniz determinant of the generic n x n matrix of the given variant. */
BD_API bd_status bd_matrix_determinant(uint32_t n, bd_variant v, uint32_t threads,
                                       bd_poly** out);

/* Diagram-side determinant: signed weight sum over all diagrams (with the
 * (-1)^(n(n-1)/2) prefactor for the B variant). */
BD_API bd_status bd_brauer_determinant(uint32_t n, bd_variant v, uint32_t threads,
                                       bd_poly** out);

/* Leibniz permanent of the generic matrix. */
BD_API bd_status bd_matrix_permanent(uint32_t n, bd_variant v, uint32_t threads, bd_poly** out);

/* Pfaffian of the generic antisymmetric matrix of size 2*half. */
BD_API bd_status bd_pfaffian(uint32_t half, bd_poly** out);

BD_API void bd_poly_free(bd_poly* p);
BD_API int bd_poly_equal(const bd_poly* p, const bd_poly* q);
BD_API uint64_t bd_poly_term_count(const bd_poly* p);

/* Canonical text form; byte-stable across runs and thread counts. */
BD_API bd_status bd_poly_to_string(const bd_poly* p, char** out);

/* ------------------------------------------------------------------ */
/* Verification and counting                                           */
/* ------------------------------------------------------------------ */

/* Each verifier returns BD_OK with a report whose ok flag records the
 * outcome; a failed verification is a result, not an error status. */
BD_API bd_status bd_verify_theorem(uint32_t n, bd_variant v, uint32_t threads, bd_report** out);
BD_API bd_status bd_verify_bijection(uint32_t n, bd_report** out);
BD_API bd_status bd_verify_lemmas(uint32_t n, bd_report** out);
BD_API bd_status bd_verify_cayley(uint32_t n, uint32_t threads, bd_report** out);

BD_API void bd_report_free(bd_report* r);
BD_API int bd_report_ok(const bd_report* r);

/* One-line human summary; owned by the report. */
BD_API const char* bd_report_summary(const bd_report* r);

/* Full machine-readable report, including the first counterexample when the
 * verification failed. */
BD_API bd_status bd_report_to_json(const bd_report* r, char** out);

/* Counting table for n as JSON: {"n", "double_factorial", "stirling_row",
 * "weighted_sum", "sylvester_v"}. */
BD_API bd_status bd_count_table(uint32_t n, char** out);

#ifdef __cplusplus
}
#endif

#endif /* BRAUERDET_H */
