#ifndef ENTBREAK_CORE_MEASURES_HPP
#define ENTBREAK_CORE_MEASURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "states.hpp"

namespace entbreak {

enum class PptVerdict { PPT, NPT };
enum class SeparabilityVerdict { Separable, Entangled, Undecided };

/// One term of an explicit separable decomposition:
/// weight * |a><a| (x) |b><b|.
struct ProductTerm {
    double weight;
    std::vector<Complex> ket_a;
    std::vector<Complex> ket_b;
};

struct MeasureReport {
    double negativity = 0.0;
    double min_pt_eigenvalue = 0.0;
    std::optional<double> concurrence;               // two-qubit only
    std::optional<double> entanglement_of_formation; // two-qubit only
    std::optional<double> g_bound;                   // two-qubit only, may be negative
    PptVerdict ppt_verdict = PptVerdict::PPT;
    SeparabilityVerdict separability = SeparabilityVerdict::Undecided;
};

/// (N, mu_min): N = max(0, -2 mu_min) over the partial-transpose spectrum.
std::pair<double, double> negativity(const DensityMatrix& rho);

/// PPT iff mu_min >= -1e-10. Separable is only certified where PPT is
/// decisive (dA*dB <= 6) or when a verifying product decomposition is
/// supplied (reconstruction max-norm <= 1e-10).
SeparabilityVerdict ppt_separability(const DensityMatrix& rho,
                                     const std::vector<ProductTerm>* decomposition = nullptr);

/// Wootters concurrence of a two-qubit state, via the Hermitian route
/// sqrt(rho) rho~ sqrt(rho).
double concurrence(const DensityMatrix& rho);

/// E_f = H[(1 + sqrt(1 - C^2))/2], base-2.
double entanglement_of_formation(const DensityMatrix& rho);

/// Base-2 binary entropy with the 0 log 0 = 0 convention.
double binary_entropy(double p);

/// Diagonal entries of a two-qubit state on the Bell basis adapted to
/// it: the eigenvalues of the real part of rho in the magic basis. The
/// corresponding eigenvectors are real there, hence maximally entangled
/// and mutually orthogonal, so they form a Bell basis in which rho has
/// exactly these diagonal entries. Invariant under local unitaries.
/// Returned descending; entries are >= 0 and sum to 1.
std::vector<double> bell_diagonal_spectrum(const DensityMatrix& rho);

/// Distillability lower bound 1 + sum_x l_x log2 l_x over the adapted
/// Bell-basis diagonal of a two-qubit state. Not clamped.
double g_lower_bound(const DensityMatrix& rho);

/// Full report for one state.
MeasureReport measure_report(const DensityMatrix& rho,
                             const std::vector<ProductTerm>* decomposition = nullptr);

/// Hermitian PSD square root via eigendecomposition (negatives clamped).
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

}  // namespace entbreak

#endif
