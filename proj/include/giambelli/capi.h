/* C interface to the z-measure / determinantal kernel library.
 *
 * All computational state lives behind the opaque gmb_ctx handle.  Results
 * are returned as JSON strings allocated by the library; release them with
 * gmb_string_free.  Exact rational values are rendered as "p/q" strings and
 * half-integer lattice points as "k/2".
 *
 * Return codes: GMB_OK on success, GMB_BAD_INPUT for unparsable or
 * inadmissible input, GMB_VERIFY_FAIL when a verification suite ran but did
 * not pass.  On any nonzero return gmb_last_error describes the problem.
 */
#ifndef GIAMBELLI_CAPI_H
#define GIAMBELLI_CAPI_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define GMB_OK 0
#define GMB_BAD_INPUT 2
#define GMB_VERIFY_FAIL 3

typedef struct gmb_ctx gmb_ctx;

gmb_ctx* gmb_ctx_new(void);
void gmb_ctx_free(gmb_ctx* ctx);

/* Message for the most recent failure on this context; owned by the
 * context, valid until the next call. */
const char* gmb_last_error(gmb_ctx* ctx);

void gmb_string_free(char* s);
const char* gmb_version(void);

/* Parameters.  z and zp accept rationals ("1/2"), decimals, or complex
 * values ("0.5+1i"); xi is a rational or decimal in (0,1) and may be NULL
 * for operations that do not need it. */
int gmb_set_params(gmb_ctx* ctx, const char* z, const char* zp,
                   const char* xi);
int gmb_set_precision(gmb_ctx* ctx, double target, int max_terms);
int gmb_set_threads(gmb_ctx* ctx, int threads);

/* Partition arguments are comma-separated part lists, optionally bracketed:
 * "[3,1]" or "3,1"; the empty string is the empty partition. */
int gmb_zmeasure_weight(gmb_ctx* ctx, const char* lambda, char** out);
int gmb_expect_fs(gmb_ctx* ctx, const char* mu, char** out);
int gmb_giambelli_check(gmb_ctx* ctx, int max_size, char** out);
int gmb_sample(gmb_ctx* ctx, int count, uint64_t seed, char** out);

/* Lattice points are half-integer strings ("1/2", "-7/2").  range gives the
 * symmetric window [-r, r]; points is a comma-separated (optionally
 * bracketed) list of distinct lattice points. */
int gmb_kernel_eval(gmb_ctx* ctx, const char* x, const char* y,
                    int residue_form, char** out);
int gmb_kernel_grid(gmb_ctx* ctx, const char* range, int residue_form,
                    char** out);
int gmb_kernel_rho(gmb_ctx* ctx, const char* points, int residue_form,
                   char** out);
int gmb_jump_check(gmb_ctx* ctx, const char* x, char** out);

/* Continuous (Whittaker) kernel at real x, y != 0; requires real z, z' with
 * 0 < |z|, |z'| < 1. */
int gmb_whittaker_eval(gmb_ctx* ctx, double x, double y, char** out);

/* Verification suites: "giambelli", "kernel-vs-oracle", "ope", "whittaker",
 * "sampler", or "all".  samples <= 0 and seed are given sensible defaults
 * where unused.  Returns GMB_VERIFY_FAIL (with the full JSON report still
 * written to *out) if any gating check fails. */
int gmb_verify(gmb_ctx* ctx, const char* suite, uint64_t seed, int samples,
               char** out);

#ifdef __cplusplus
}
#endif

#endif
