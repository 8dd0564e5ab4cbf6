/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef XSEP_H
#define XSEP_H

#include <stddef.h>
#include <stdint.h>
#include <stdbool.h>

typedef enum XsepStatus {
  XSEP_STATUS_OK = 0,
  XSEP_STATUS_NULL_POINTER = 1,
  XSEP_STATUS_INVALID_ARGUMENT = 2,
  XSEP_STATUS_PARSE_ERROR = 3,
  XSEP_STATUS_NOT_A_STATE = 4,
  XSEP_STATUS_NOT_DECOMPOSABLE = 5,
  XSEP_STATUS_OUT_OF_RANGE = 6,
  XSEP_STATUS_PANIC = 7,
} XsepStatus;

typedef enum XsepVerdictTag {
  XSEP_VERDICT_TAG_NOT_A_STATE = 0,
  XSEP_VERDICT_TAG_NPT_ENTANGLED = 1,
  XSEP_VERDICT_TAG_PPT_ENTANGLED = 2,
  XSEP_VERDICT_TAG_SEPARABLE = 3,
  XSEP_VERDICT_TAG_INCONCLUSIVE = 4,
} XsepVerdictTag;

// Inequality behind a `PptEntangled` verdict.
typedef enum XsepCriterion {
  XSEP_CRITERION_NONE = 0,
  XSEP_CRITERION_DIAG = 1,
  XSEP_CRITERION_PHASE = 2,
  XSEP_CRITERION_A_RHO = 3,
  XSEP_CRITERION_RANK6 = 4,
} XsepCriterion;

// Branch behind a `Separable` verdict.
typedef enum XsepRoute {
  XSEP_ROUTE_NONE = 0,
  XSEP_ROUTE_DIAGONAL = 1,
  XSEP_ROUTE_RANK4 = 2,
  XSEP_ROUTE_RANK5 = 3,
  XSEP_ROUTE_RANK6 = 4,
  XSEP_ROUTE_COMMON_MAGNITUDE = 5,
  XSEP_ROUTE_EPS_MIXTURE = 6,
} XsepRoute;

// Opaque decomposition handle.
typedef struct XsepDecomposition XsepDecomposition;

// Opaque X-state handle.
typedef struct XsepState XsepState;

// Flattened verdict. `system` is 0, 1, 2 for A, B, C on `NptEntangled` and -1 otherwise;
// `lhs` and `rhs` are NaN when the verdict carries no inequality.
typedef struct XsepVerdict {
  enum XsepVerdictTag tag;
  enum XsepCriterion criterion;
  enum XsepRoute route;
  int32_t system;
  double lhs;
  double rhs;
  size_t certificate_terms;
} XsepVerdict;

// `phi` is NaN when some anti-diagonal entry vanishes.
typedef struct XsepInvariants {
  double delta;
  double big_r;
  double small_r;
  double phi;
  size_t rank;
  size_t pt_ranks[3];
  size_t p_score;
} XsepInvariants;

// One weighted product vector `w |x⟩⟨x| ⊗ |y⟩⟨y| ⊗ |z⟩⟨z|` with unit-norm factors.
typedef struct XsepTerm {
  double weight;
  double x_re[2];
  double x_im[2];
  double y_re[2];
  double y_im[2];
  double z_re[2];
  double z_im[2];
} XsepTerm;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds a state from `a[4]`, `b[4]`, `c_re[4]`, `c_im[4]`. A `tol` of 0 selects the default.
//
// # Safety
// The four array pointers must each reference four readable doubles and `out` must be
// writable. The handle written to `out` must be released with [`xsep_state_free`].
enum XsepStatus xsep_state_new(const double *a,
                               const double *b,
                               const double *c_re,
                               const double *c_im,
                               double tol,
                               struct XsepState **out);

// Parses the JSON state format `{"a":[..], "b":[..], "c":[[re,im],..], "tol"?}`.
//
// # Safety
// `json` must be a NUL-terminated string and `out` writable.
enum XsepStatus xsep_state_from_json(const char *json, struct XsepState **out);

// # Safety
// `s` must be null or a handle from this library that has not been freed.
void xsep_state_free(struct XsepState *s);

// # Safety
// `s` must be a live state handle and `out` writable.
enum XsepStatus xsep_classify(const struct XsepState *s, struct XsepVerdict *out);

// Verdict as JSON, including any certificate. Release the string with [`xsep_string_free`].
//
// # Safety
// `s` must be a live state handle and `out` writable.
enum XsepStatus xsep_classify_json(const struct XsepState *s, char **out);

// # Safety
// `p` must be null or a string returned by this library that has not been freed.
void xsep_string_free(char *p);

// # Safety
// `s` must be a live state handle and `out` writable.
enum XsepStatus xsep_invariants(const struct XsepState *s, struct XsepInvariants *out);

// # Safety
// `s` must be a live state handle and `out` writable.
enum XsepStatus xsep_a_rho(const struct XsepState *s, double *out);

// Certificate for a state classified separable; `NotDecomposable` otherwise.
//
// # Safety
// `s` must be a live state handle and `out` writable. Release the result with
// [`xsep_decomposition_free`].
enum XsepStatus xsep_decompose(const struct XsepState *s, struct XsepDecomposition **out);

// Number of terms; 0 for a null handle.
//
// # Safety
// `d` must be null or a live decomposition handle.
size_t xsep_decomposition_len(const struct XsepDecomposition *d);

// Largest entrywise deviation between the recomposed sum and the source state.
//
// # Safety
// `d` must be null or a live decomposition handle.
double xsep_decomposition_max_error(const struct XsepDecomposition *d);

// # Safety
// `d` must be a live decomposition handle and `out` writable.
enum XsepStatus xsep_decomposition_term(const struct XsepDecomposition *d,
                                        size_t index,
                                        struct XsepTerm *out);

// # Safety
// `d` must be null or a handle from this library that has not been freed.
void xsep_decomposition_free(struct XsepDecomposition *d);

// Message for the last failed call on this thread, empty after a success. The pointer
// stays valid until the next call into this library on the same thread.
const char *xsep_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* XSEP_H */
