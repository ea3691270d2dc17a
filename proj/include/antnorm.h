/*
 * antnorm C API.
 *
 * Every verification and prediction the library offers is exposed as one
 * call that returns an opaque result handle. Query the handle for the
 * status code, the rendered output (text or JSON, newline-terminated) and
 * an optional diagnostic message, then free it. Calls never throw across
 * this boundary and are safe to issue from any thread.
 *
 * Status codes match the CLI exit codes:
 *   0  success (including expected boundary findings)
 *   1  a verification failed
 *   2  bad arguments or a resource budget was exceeded
 */

#ifndef ANTNORM_H
#define ANTNORM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define ANTNORM_STATUS_OK 0
#define ANTNORM_STATUS_FAIL 1
#define ANTNORM_STATUS_USAGE 2

typedef struct an_result an_result;

int an_result_status(const an_result* r);
const char* an_result_output(const an_result* r);  /* never NULL */
const char* an_result_message(const an_result* r); /* never NULL, "" if none */
void an_result_free(an_result* r);

const char* an_version(void);

/* Integer list specs ("3", "3,5,11", "3..8", mixes) are parsed by the
 * library. `format` is "text" or "json"; NULL means "text". */

/* factor-split product identities and eigenvalue-matrix full-rank checks
 * over a grid of (ell, n) */
an_result* an_lemmas(const char* ell_spec, const char* n_spec, const char* format);

/* rank-dichotomy scans; sampled != 0 switches from exhaustive enumeration
 * to `samples` seed-deterministic draws. budget 0 means the default. */
an_result* an_all_or_nothing(const char* ell_spec, const char* n_spec, const char* case_spec,
                             int sampled, uint64_t samples, uint64_t seed, uint64_t budget,
                             const char* format);

/* exact rank distribution of the ambiguous class group for a profile */
an_result* an_predict(uint64_t ell, unsigned t, unsigned s, const char* n_spec,
                      const char* format);

/* predictions against the embedded observed datasets (tables 3 and 4) */
an_result* an_compare(int table_id, const char* format);

/* Monte Carlo rank distribution under the equidistribution model */
an_result* an_simulate(uint64_t ell, unsigned t, unsigned s, unsigned n, uint64_t samples,
                       uint64_t seed, const char* format);

/* partial sums and remainder bound of the stabilization series */
an_result* an_tail(uint64_t ell, unsigned t, unsigned start_level, unsigned terms,
                   const char* format);

/* ambiguous class number h * ell^e_exp / (ell * ell^unit_index_exp) */
an_result* an_chevalley(const char* h, unsigned e_exp, uint64_t ell, unsigned unit_index_exp,
                        const char* format);

/* growth-law compatibility of an exponent sequence, e.g. "1,2,6" */
an_result* an_iwasawa(const char* e_list, uint64_t ell, unsigned s, const char* format);

#ifdef __cplusplus
}
#endif

#endif /* ANTNORM_H */
