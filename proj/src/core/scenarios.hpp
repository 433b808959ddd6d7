#ifndef ENTBREAK_CORE_SCENARIOS_HPP
#define ENTBREAK_CORE_SCENARIOS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "channels.hpp"
#include "measures.hpp"
#include "states.hpp"

namespace entbreak {
namespace paper {

/// Critical noise value -16 + 12 sqrt(2) at which the rotated state's
/// output becomes separable.
double lambda1();

DensityMatrix rho1_in();
ComplexMatrix unitary_ua();  // 1/sqrt2 [[1,-1],[1,1]], Ry(pi/2)
DensityMatrix rho2_in();
DensityMatrix rho3_in(double t);
DensityMatrix phi_plus();
PureState qutrit_psi1();
PureState qutrit_psi2(double q);

/// Closed-form negativities of the three phase-damped outputs.
double n1_closed(double lambda);
double n2_closed(double lambda);
double n3_closed(double lambda, double t);

/// Builtin registry: rho1_in, rho2_in, rho3_in:t=<v>, phi_plus (as a
/// density matrix); qutrit pure states resolve through qutrit_state().
DensityMatrix builtin_state(const std::string& ref);

}  // namespace paper

struct RootResult {
    double value;
    double residual;       // |f(value)|
    int iterations;
    double bracket_lo, bracket_hi;
};

/// Smallest lambda in the family domain at which the phase-damped state
/// becomes PPT, by bracketing bisection on the minimum partial-transpose
/// eigenvalue. |delta lambda| <= 1e-12 at exit.
RootResult solve_lambda_sep(const ChannelFamily& family, const DensityMatrix& rho);

/// Bisection solution of E_f(rho3_in(t)) = 1 - H(1/6) on (0,1).
RootResult solve_t_threshold();

// ---- ordering-change certificates ----

struct LoccStepUnitaryInverse {
    ComplexMatrix u;
    Side side;
};
struct LoccStepReplaceWith00 {
    double epsilon;
};
using LoccStep = std::variant<LoccStepUnitaryInverse, LoccStepReplaceWith00>;

struct CertificatePiece {
    std::string name;
    bool passed;
    double value;        // the witness number for this piece
    std::string detail;
};

struct OrderingCertificate {
    bool valid = false;
    std::string first_failure;  // empty when valid
    std::vector<CertificatePiece> pieces;
    std::optional<std::pair<double, double>> strict_window;  // (lo, t*]
};

/// Certifies selective entanglement breaking for (channel, omega1, omega2):
/// the LOCC chain maps omega1 to omega2, the input negativity order is
/// strict, the channel output of omega1 is separable and that of omega2
/// is entangled. Pieces are checked in that order; the first failure is
/// named in the certificate.
OrderingCertificate certify_selective_breaking(const KrausChannel& channel,
                                               const DensityMatrix& omega1,
                                               const DensityMatrix& omega2,
                                               const std::vector<LoccStep>& locc_chain,
                                               bool with_strict_window = false);

struct StrongSequenceSample {
    double t;
    double n_in;
    double n_out;
    double ef_in;
};

struct StrongCertificate {
    bool valid = false;
    std::string first_failure;
    std::vector<CertificatePiece> pieces;
    std::vector<StrongSequenceSample> sequence;
};

/// Strong selective breaking along a decreasing sequence t_j (each < 2/3):
/// negativity monotone along the sequence, every output entangled while
/// the omega1 output is separable, and the entanglement of formation of
/// the tail below 1e-6.
StrongCertificate certify_strong_selective_breaking(const KrausChannel& channel,
                                                    const DensityMatrix& omega1,
                                                    const std::vector<double>& t_sequence);

// ---- qutrit example ----

struct QutritBranch {
    double probability;
    std::vector<double> schmidt;        // descending
    double schmidt_error;               // vs {sqrt(q), sqrt(1-q)}
    double overlap_with_psi2;           // |<psi2|P branch>| after level permutation
};

struct QutritReport {
    double q;
    double n_out1;
    double n_out2;
    bool out1_separable;                // via explicit product decomposition
    double out2_defect;                 // max-norm vs |psi2><psi2|
    double filter_completeness_defect;
    QutritBranch branches[2];
    bool valid;
};

QutritReport qutrit_example(double q);

// ---- randomized no-go scan ----

struct NogoCounterexample {
    int trial;
    double alpha;
    double output_mu_min;
    double choi_mu_min;
};

struct NogoReport {
    int trials;
    std::uint64_t seed;
    int separable_outputs;
    int eb_confirmed;
    std::vector<NogoCounterexample> counterexamples;
};

/// Random qubit channels against pure inputs alpha|00> + beta|11>:
/// whenever the output is PPT the channel's Choi matrix must be PPT too.
NogoReport pure_state_nogo_scan(int trials, std::uint64_t seed);

// ---- unitary-orbit search ----

struct SearchRecord {
    double theta, phi, psi;
    double lambda_sep;
    double gap;
};

struct SearchResult {
    bool no_sign_change = false;        // input never entangled under the family
    double lambda_sep_base = 0.0;
    std::vector<SearchRecord> records;  // sorted by gap descending
};

/// Euler grid U = Rz(phi) Ry(theta) Rz(psi), grid_n points per angle;
/// lambda_sep of each rotated state vs the unrotated one. The top record
/// is refined by coordinate ternary search within one grid cell.
SearchResult orbit_search(const DensityMatrix& rho, const ChannelFamily& family,
                          int grid_n = 16);

ComplexMatrix euler_unitary(double theta, double phi, double psi);

}  // namespace entbreak

#endif
