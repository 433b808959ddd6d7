/* entbreak: entanglement measures of small bipartite states under local
 * noisy channels. C API over the C++ core; all handles are opaque and
 * every function reports an eb_status. String outputs are heap-allocated
 * and must be released with eb_string_free. */

#ifndef ENTBREAK_H
#define ENTBREAK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct eb_state eb_state;

typedef enum {
    EB_OK = 0,
    EB_ERR_INVALID_ARGUMENT,
    EB_ERR_DIMENSION_MISMATCH,
    EB_ERR_NOT_HERMITIAN,
    EB_ERR_NOT_UNITARY,
    EB_ERR_PARAMETER_OUT_OF_RANGE,
    EB_ERR_NOT_CONVERGED,
    EB_ERR_NO_SIGN_CHANGE,
    EB_ERR_CERTIFICATE_FAILURE,
    EB_ERR_UNKNOWN_STATE_REF,
    EB_ERR_UNSUPPORTED_DIMENSION,
    EB_ERR_PARSE,
    EB_ERR_INTERNAL
} eb_status;

const char* eb_status_name(eb_status status);

/* Message for the most recent failure on this thread. */
const char* eb_last_error_message(void);

void eb_string_free(char* s);

/* -- states ------------------------------------------------------------ */

/* Builtin registry: rho1_in, rho2_in, rho3_in:t=<v>, phi_plus,
 * qutrit_psi1, qutrit_psi2:q=<v>. */
eb_status eb_state_builtin(const char* ref, eb_state** out);

/* {"dimA": n, "dimB": m, "matrix": [[re, im], ...]} row-major; all
 * density-matrix invariants are validated on load. */
eb_status eb_state_from_json(const char* json_text, eb_state** out);
eb_status eb_state_to_json(const eb_state* state, char** json_out);
void eb_state_free(eb_state* state);

/* Negativity, PPT verdict, and (for two qubits) concurrence, E_f and the
 * g bound, serialized as JSON. */
eb_status eb_state_measures(const eb_state* state, char** json_out);

/* -- solvers ----------------------------------------------------------- */

/* Smallest lambda at which the phase-damped state becomes separable. */
eb_status eb_solve_lambda_sep(const eb_state* state, double* value, char** report_json);

/* Root of E_f(rho3_in(t)) = 1 - H(1/6) on (0,1). */
eb_status eb_solve_t_threshold(double* value, char** report_json);

/* -- paper reproductions ----------------------------------------------- */

/* CSV (lambda,N_rho1_out,N_rho2_out,N_rho3_out) over a lambda grid plus
 * a companion JSON with lambda1 and closed-form residuals. */
eb_status eb_reproduce_fig2(double t, int grid_points, char** csv_out, char** companion_json_out);

/* Certificates on the builtin instance (channel phase_damping(lambda),
 * omega1 = rho2_in, omega2 = rho3_in(t)). Pass lambda < 0 for the
 * critical value lambda1. A failed certificate returns
 * EB_ERR_CERTIFICATE_FAILURE with the full JSON still populated. */
eb_status eb_certify_seb(double t, double lambda, char** cert_json);
eb_status eb_certify_strong_seb(int sequence_length, double lambda, char** cert_json);

/* Qutrit dephasing example report for filter parameter q in (0,1). */
eb_status eb_qutrit_example(double q, char** report_json);

/* -- searches ---------------------------------------------------------- */

/* Random qubit channels vs pure inputs alpha|00>+beta|11|; a PPT output
 * must imply an entanglement-breaking channel. Returns
 * EB_ERR_CERTIFICATE_FAILURE if any counterexample is recorded. */
eb_status eb_scan_nogo(int trials, uint64_t seed, char** report_json);

/* Euler-grid unitary-orbit search over the phase-damping family;
 * CSV theta,phi,psi,lambda_sep,gap sorted by gap descending. */
eb_status eb_search(const eb_state* state, int grid_n, char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* ENTBREAK_H */
