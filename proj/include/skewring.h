/* C interface for the skewring library.
 *
 * Groups are opaque handles created from a presentation such as
 * "<a,b | a^4=1, b^2=a^2, b^-1*a*b=a^-1>" or from a plain multiplication
 * table ("order n" followed by n rows of n element indices). Kernel
 * arguments are comma-separated words in the presentation's generators
 * ("a^2,a*b"); for table-backed groups, comma-separated element indices.
 *
 * All functions returning sr_status set a thread-local error message
 * retrievable with sr_last_error() on failure. Strings returned through
 * char** out-parameters are heap-allocated; release them with
 * sr_string_free().
 */

#ifndef SKEWRING_H
#define SKEWRING_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sr_status {
  SR_OK = 0,
  SR_ERR_INPUT = 1,    /* malformed input, bad arguments, parse errors */
  SR_ERR_REALIZE = 2,  /* presentation could not be realized within limits */
  SR_ERR_OVERFLOW = 3, /* integer overflow in exact arithmetic */
  SR_ERR_INTERNAL = 4
} sr_status;

typedef struct sr_group sr_group;

/* Last error message for the calling thread; valid until the next failing
 * call. Never NULL. */
const char* sr_last_error(void);

void sr_string_free(char* s);

sr_status sr_group_from_presentation(const char* text, sr_group** out);
sr_status sr_group_from_table(const char* text, sr_group** out);
void sr_group_free(sr_group* g);

sr_status sr_group_order(const sr_group* g, int* out);

/* Newline-separated list of all index-2 subgroups, one generator list per
 * line, each usable as a kernel argument. */
sr_status sr_kernels_list(const sr_group* g, char** out);

/* Decide whether the antisymmetric elements of the group ring commute.
 * ring is "z" or "z/<m>" with m >= 3 and characteristic != 2.
 * *out_commutative is 1 or 0; when 0, *out_witness (if non-NULL) receives a
 * description of a noncommuting generator pair. */
sr_status sr_check(const sr_group* g, const char* kernel, const char* ring,
                   int* out_commutative, char** out_witness);

/* Structural classification. ringclass is "r2zero", "char4" or "other".
 * *out_case receives the case label (possibly with a kernel variant, e.g.
 * "C5:<a,b^2>"), "abelian" for abelian groups, or "" when no case matches
 * (prediction: not commutative). */
sr_status sr_classify(const sr_group* g, const char* kernel,
                      const char* ringclass, char** out_case);

/* Run the catalog verification suite. format is "plain" or "tsv".
 * *out_ok is 1 when every expected good/bad kernel partition is
 * reproduced. */
sr_status sr_verify_paper(const char* format, char** out_report, int* out_ok);

/* Cross-validate brute force against the classifier. rings is a
 * comma-separated list such as "z,z/4,z/8". *out_ok is 1 when there are no
 * mismatches and no audit failures. */
sr_status sr_census(int max_rank, const char* rings, const char* format,
                    char** out_report, int* out_ok);

/* Audit the structural invariants of a commutative instance. Fails with
 * SR_ERR_INPUT if the instance is not commutative. *out_ok is 1 when no
 * assertion is violated. */
sr_status sr_audit(const sr_group* g, const char* kernel, const char* ring,
                   char** out_report, int* out_ok);

#ifdef __cplusplus
}
#endif

#endif
