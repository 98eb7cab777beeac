/* C interface of the felderhof library.
 *
 * Every function that can fail returns a feld_status; on failure the
 * out-parameters are left untouched and feld_last_error() carries a
 * human-readable message for the calling thread. Strings returned through
 * char** out-parameters are heap blocks owned by the caller; release them
 * with feld_string_free. Polynomial handles are opaque and released with
 * feld_poly_free.
 *
 * Marked site positions are 1-based and strictly increasing. Partitions are
 * weakly decreasing lists of nonnegative parts. Spectral parameters are the
 * symbols z1..zN, the deformation parameter is the symbol t; results are
 * exact integer-coefficient Laurent polynomials in these (plus a1..aM or
 * v1..vM for the inhomogeneous tables).
 */

#ifndef FELDERHOF_H
#define FELDERHOF_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef FELD_API
#if defined(_WIN32)
#define FELD_API
#else
#define FELD_API __attribute__((visibility("default")))
#endif
#endif

/* Status values double as process exit codes for the bundled CLI. */
typedef enum feld_status {
  FELD_OK = 0,
  FELD_ERR_UNKNOWN = 1,
  FELD_ERR_INVALID = 2, /* bad arguments or malformed input */
  FELD_ERR_VERIFY = 3,  /* a verification suite reported failures */
  FELD_ERR_CAP = 4      /* a size cap was exceeded */
} feld_status;

typedef struct feld_poly feld_poly;

/* Library version as "major.minor.patch". Static storage, do not free. */
FELD_API const char* feld_version(void);

/* Message of the most recent failure on this thread ("" if none). The
 * buffer is invalidated by the next library call on the same thread. */
FELD_API const char* feld_last_error(void);

FELD_API void feld_poly_free(feld_poly* p);
FELD_API void feld_string_free(char* s);

/* ---- polynomial handles ------------------------------------------------ */

/* Render a polynomial; format is "json", "csv" or "pretty". */
FELD_API feld_status feld_poly_render(const feld_poly* p, const char* format, char** out);

/* Exact evaluation at a rational point, e.g. "z1=3/2,z2=7,t=2". Every
 * variable occurring in p must be assigned. The result is a rational in
 * lowest terms, e.g. "15/4". */
FELD_API feld_status feld_poly_eval(const feld_poly* p, const char* assignments, char** out);

FELD_API feld_status feld_poly_equal(const feld_poly* a, const feld_poly* b, int* out_equal);
FELD_API feld_status feld_poly_term_count(const feld_poly* p, long* out_count);

/* ---- configuration translations ---------------------------------------- */

/* Positions (n marks on `sites` sites) to the n-part partition and back.
 * out_partition / out_positions must hold n entries. */
FELD_API feld_status feld_partition_from_config(int sites, int n, const int* positions,
                                                int* out_partition);
FELD_API feld_status feld_config_from_partition(int sites, int n, int parts,
                                                const int* partition, int* out_positions);

/* ---- model computations ------------------------------------------------ */

/* Row-operator variants: "standard", "rescaled", "five-vertex",
 * "inhomogeneous". The inhomogeneous table carries symbolic shifts a1..aM. */

/* <x|B(z1)...B(zN)|empty> for particle positions x (n of them). */
FELD_API feld_status feld_wavefunction(int sites, int n, const int* particles,
                                       const char* variant, feld_poly** out);

/* <full|B(z1)...B(zN)|xbar> for hole positions xbar (n of them). */
FELD_API feld_status feld_dual_wavefunction(int sites, int n, const int* holes,
                                            const char* variant, feld_poly** out);

/* The same dual overlap computed by the transfer-operator trace route. */
FELD_API feld_status feld_mp_dual_wavefunction(int sites, int n, const int* holes,
                                               feld_poly** out);

/* Schur polynomial s_lambda(z1..zn). */
FELD_API feld_status feld_schur(int n, int parts, const int* partition, feld_poly** out);

/* Factorial Schur polynomial s_lambda(z1..zn | a). `alphas` is a comma
 * separated list of integer shifts, or NULL/"" for symbolic a1, a2, ... */
FELD_API feld_status feld_factorial_schur(int n, int parts, const int* partition,
                                          const char* alphas, feld_poly** out);

/* Weighted sums over strict triangular patterns: top row pinned by lambda,
 * and the dual reading with the bottom row pinned (holes on `sites` sites). */
FELD_API feld_status feld_gt_sum(int n, int parts, const int* partition, feld_poly** out);
FELD_API feld_status feld_dual_gt_sum(int sites, int n, const int* holes, feld_poly** out);

/* Domain-wall partition function Z_M; variant is "standard" (alias
 * "homogeneous") or "inhomogeneous" (per-column divisors v1..vM). */
FELD_API feld_status feld_dwbp(int sites, const char* variant, feld_poly** out);

/* Single-row element <xbar|B(z1)|ybar> between hole configurations. */
FELD_API feld_status feld_b_element(int sites, int nx, const int* xbar, int ny, const int* ybar,
                                    const char* variant, feld_poly** out);

/* ---- suites ------------------------------------------------------------ */

/* Run a verification suite: "all" or a group id "c01".."c15". The JSON
 * report is always produced when the suite runs; the return value is
 * FELD_OK when everything passed and FELD_ERR_VERIFY otherwise.
 * report_json and all_passed may be NULL when not wanted. */
FELD_API feld_status feld_verify(const char* suite, uint64_t seed, char** report_json,
                                 int* all_passed);

/* Strategy benchmark at the given sizes; format is "csv" or "json". Every
 * emitted row agrees with the reference strategy or the run fails. */
FELD_API feld_status feld_bench(int sites, int n, const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* FELDERHOF_H */
