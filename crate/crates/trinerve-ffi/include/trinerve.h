/* C ABI for the trinerve library. Generated to match crates/trinerve-ffi;
 * kept in sync by the header_matches_surface test. */

#ifndef TRINERVE_H
#define TRINERVE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes shared by all fallible entry points.
 */
typedef enum TnStatus {
  TnOk = 0,
  TnVerificationFailed = 1,
  TnInputError = 2,
  TnBudgetExceeded = 3,
} TnStatus;

/**
 * Nerve kinds accepted by `tn_nerve_build`.
 */
typedef enum TnNerveKind {
  TnNerveCategory = 0,
  TnNerveDuskin = 1,
  TnNerveGeometric3 = 2,
  TnNerveDiagTriple = 3,
} TnNerveKind;

/**
 * Coefficient tags for `tn_homology`.
 */
typedef enum TnCoeff {
  TnCoeffZ = 0,
  TnCoeffQ = 1,
  TnCoeffZp = 2,
} TnCoeff;

/**
 * An opaque truncated simplicial set.
 */
typedef struct TnComplex TnComplex;

#ifdef __cplusplus
extern "C" {
#endif

/**
 * Copy the last error message of this thread into `buf` (NUL-terminated,
 * truncated to `len`); returns the full message length in bytes.
 */
size_t tn_last_error_message(char *buf, size_t len);

/**
 * Parse an SSX document into a complex; null on error.
 */
struct TnComplex *tn_complex_from_ssx(const char *text);

/**
 * Serialize a complex to SSX; free the result with `tn_string_free`.
 */
char *tn_complex_to_ssx(const struct TnComplex *c);

void tn_string_free(char *s);

void tn_complex_free(struct TnComplex *c);

/**
 * Truncation dimension; -1 on a null handle.
 */
int32_t tn_complex_trunc(const struct TnComplex *c);

/**
 * Number of nondegenerate simplices in a dimension; -1 on error.
 */
int64_t tn_complex_count(const struct TnComplex *c, size_t dim);

/**
 * Number of simplicial-identity violations (0 means the complex is valid);
 * -1 on a null handle.
 */
int64_t tn_complex_check_identities(const struct TnComplex *c);

/**
 * Build a nerve from a JSON description (same schema as the CLI input);
 * null on error.
 */
struct TnComplex *tn_nerve_build(const char *input_json,
                                 enum TnNerveKind kind,
                                 size_t trunc,
                                 size_t budget);

/**
 * Homology in one degree: writes the betti number and up to
 * `torsion_cap` torsion coefficients, returning the torsion count;
 * negative values are `TnStatus` codes negated.
 */
int64_t tn_homology(const struct TnComplex *c,
                    size_t degree,
                    enum TnCoeff coeff,
                    uint64_t prime,
                    int64_t *out_betti,
                    int64_t *out_torsion,
                    size_t torsion_cap);

/**
 * Exhaustive horn check at `(n, k)`: returns the number of horns without
 * a filler (0 means Kan at this index), or a negated status code.
 */
int64_t tn_kan_check(const struct TnComplex *c, size_t n, size_t k);

/**
 * Validate Postnikov data (JSON, same schema as the CLI): returns TnOk
 * when `h` and `t` are cocycles, TnVerificationFailed when not, input or
 * budget codes otherwise.  When `full` is nonzero the Kan sweep over the
 * 5-horns of the twisted complex runs as well.
 */
enum TnStatus tn_postnikov_verify(const char *input_json, int32_t full, size_t budget);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  /* TRINERVE_H */
