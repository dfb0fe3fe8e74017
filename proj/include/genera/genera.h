#ifndef GENERA_H
#define GENERA_H

/*
 * C interface to the genera library: exact computation of Hirzebruch
 * genera of circle-action manifolds from fixed-point data, evaluation
 * of the Conner-Floyd constraints, and Hamiltonicity classification.
 *
 * Conventions:
 *   - Every fallible call returns a genera_status; GENERA_OK means the
 *     call succeeded and all out-parameters are set. On failure the
 *     out-parameters are untouched and genera_last_error() holds a
 *     message (thread-local, valid until the next call on the thread).
 *   - Handles are opaque and owned by the caller; release them with
 *     the matching *_free function. Freeing NULL is a no-op.
 *   - Structured results come back as JSON text in malloc'd NUL
 *     terminated strings; release them with genera_string_free().
 *   - All arithmetic is exact. Identical inputs produce byte-identical
 *     JSON, independent of the order of points in the input.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum genera_status {
    GENERA_OK = 0,
    /* Input text is not valid JSON or does not match the schema. */
    GENERA_ERR_PARSE = 1,
    /* Dataset fails structural validation (wrong weight count, zero
     * weight, nonpositive half-dimension). */
    GENERA_ERR_INVALID_DATASET = 2,
    /* An argument is out of range for the operation (NULL handle,
     * unknown genus name, order too small, ...). */
    GENERA_ERR_ARGUMENT = 3,
    /* Unexpected internal failure. */
    GENERA_ERR_INTERNAL = 4
} genera_status;

/* Fixed-point data of a circle action on a 2n-manifold. */
typedef struct genera_dataset genera_dataset;

/* A multiplicative genus, determined by its values on the complex
 * projective spaces. */
typedef struct genera_genus genera_genus;

const char* genera_version(void);

/* Message for the most recent failure on this thread; empty string
 * after a success. */
const char* genera_last_error(void);

void genera_string_free(char* s);

/* ---- datasets ---------------------------------------------------- */

/* Parses {"half_dimension": n, "points": [{"label"?, "weights"}...]}.
 * Weights must be JSON integers. Schema violations are PARSE errors;
 * the handle may still describe a structurally invalid dataset, which
 * genera_dataset_validate reports. */
genera_status genera_dataset_parse(const char* json_text, genera_dataset** out);
genera_status genera_dataset_read(const char* path, genera_dataset** out);

/* The linear action t.[z_0:...:z_n] = [t^{a_0} z_0:...:t^{a_n} z_n]
 * on CP(n), from the n+1 pairwise distinct exponents a. */
genera_status genera_dataset_cp(const long long* exponents, size_t count,
                                genera_dataset** out);

/* n-fold product of the semi-free sphere: 2^n points, weights +-1. */
genera_status genera_dataset_semifree_power(int n, genera_dataset** out);

/* Diagonal action on a product: points pair up, weight lists concatenate. */
genera_status genera_dataset_product(const genera_dataset* a, const genera_dataset* b,
                                     genera_dataset** out);

void genera_dataset_free(genera_dataset* d);

int genera_dataset_half_dimension(const genera_dataset* d);
long long genera_dataset_point_count(const genera_dataset* d);

/* Canonical JSON form; round-trips bit-exactly through parse. */
genera_status genera_dataset_json(const genera_dataset* d, char** out_json);

/* Structural checks as {"valid": bool, "issues": [...]}. */
genera_status genera_dataset_validate(const genera_dataset* d, char** out_json);

/* ---- genera ------------------------------------------------------ */

/* One of "todd", "chi_y", "signature", "euler". */
genera_status genera_genus_builtin(const char* name, genera_genus** out);

/* Custom genus {"name", "ring": "rational"|"y_polynomial",
 * "cp_values": [...]}; cp_values[m-1] is the value on CP(m) and bounds
 * the usable truncation order at one more than their count. */
genera_status genera_genus_parse(const char* json_text, genera_genus** out);
genera_status genera_genus_read(const char* path, genera_genus** out);

void genera_genus_free(genera_genus* g);

const char* genera_genus_name(const genera_genus* g);

/* ---- computation ------------------------------------------------- */

/* Evaluates the Conner-Floyd fixed-point sum for one genus. order = 0
 * picks the default n + 8; explicit orders must be at least n + 1.
 * The JSON report carries the truncated Laurent series, whether the
 * negative part vanishes, and the constant term (the genus of the
 * manifold when it does). Inconsistent data is a reported result, not
 * an error status. */
genera_status genera_compute(const genera_dataset* d, const genera_genus* g, int order,
                             char** out_json);

/* Todd-genus dichotomy: {"verdict": "Hamiltonian" | "NonHamiltonian" |
 * "NotRealizable", "todd": "p/q", "reasons": [...]}. */
genera_status genera_classify(const genera_dataset* d, int order, char** out_json);

/* Consolidated document: localization of all four built-in genera,
 * classification, fixed-point parity, Betti numbers via the moment
 * map, the Poincare-polynomial identity, and on 4k-manifolds the
 * signature relation. */
genera_status genera_report(const genera_dataset* d, int order, char** out_json);

/* Fixed-point count profile (F_0..F_n) of a semi-free action with
 * fixed-point "volume" lambda (a rational string): the exact solution
 * of the localization constraints next to the binomial closed form. */
genera_status genera_semifree_profile(int n, const char* lambda, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* GENERA_H */
