#ifndef ENTBREAK_CORE_CHANNELS_HPP
#define ENTBREAK_CORE_CHANNELS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "complex_matrix.hpp"
#include "states.hpp"

namespace entbreak {

/// Quantum channel in operator-sum form on one subsystem.
class KrausChannel {
public:
    /// Checks completeness sum K^dag K = I within 1e-12.
    KrausChannel(std::size_t dim_in, std::size_t dim_out, std::vector<ComplexMatrix> ops);

    std::size_t dim_in() const { return dim_in_; }
    std::size_t dim_out() const { return dim_out_; }
    const std::vector<ComplexMatrix>& ops() const { return ops_; }

    double completeness_defect() const;

private:
    std::size_t dim_in_, dim_out_;
    std::vector<ComplexMatrix> ops_;
};

/// One-parameter channel family over a closed interval. Generators must
/// be deterministic; validity is checked by a 101-point grid scan.
struct ChannelFamily {
    std::string parameter_name;
    double lo = 0.0;
    double hi = 1.0;
    std::function<KrausChannel(double)> generator;

    /// Throws if any grid point violates the KrausChannel invariants.
    void validate(int grid_points = 101) const;
};

/// Qubit phase damping: E0 = diag(1, sqrt(1-lambda)), E1 = |1><1| sqrt(lambda).
KrausChannel phase_damping(double lambda);
ChannelFamily phase_damping_family();

/// Qutrit dephasing projectors M0 = |0><0|+|1><1|, M1 = |2><2|.
KrausChannel qutrit_dephase();

/// Qutrit filter A0 = diag(1, sqrt(1-q), sqrt(q)), A1 = diag(0, sqrt(q), sqrt(1-q)).
KrausChannel qutrit_filter(double q);

/// Apply the channel to one side: sum_k (K (x) I) rho (K (x) I)^dag.
DensityMatrix apply_local(const KrausChannel& channel, const DensityMatrix& rho, Side side);

/// (U (x) I) rho (U (x) I)^dag; u must be unitary within 1e-12.
DensityMatrix local_unitary(const DensityMatrix& rho, const ComplexMatrix& u, Side side);

/// Mix with |00><00|: (1-eps) rho + eps |00><00| on a two-qubit state.
DensityMatrix replace_with_00(const DensityMatrix& rho, double epsilon);

/// Normalized Choi state (E (x) I)(|Phi_d><Phi_d|); requires dimIn = dimOut = d <= 3.
DensityMatrix choi_matrix(const KrausChannel& channel);

struct EntanglementBreakingResult {
    bool breaking;
    double choi_min_pt_eigenvalue;  // witness
};

/// Choi-PPT test; qubit channels only (PPT <=> separable in 2x2).
EntanglementBreakingResult is_entanglement_breaking(const KrausChannel& channel);

/// Deterministic uniform/gaussian source for channel and state sampling.
/// Derives doubles from the raw 64-bit stream so output never depends on
/// standard-library distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next_u64();
    double uniform();                 // [0,1)
    double uniform(double lo, double hi);
    double gauss();                   // standard normal, Box-Muller

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Haar-style random qubit channel with Kraus rank <= 4, built from a
/// random 2 -> 8 isometry (QR of a Ginibre matrix) sliced into 4 blocks.
KrausChannel random_qubit_channel(Rng& rng);

/// Random Haar qubit unitary.
ComplexMatrix random_qubit_unitary(Rng& rng);

/// Random full-rank two-qubit density matrix (normalized G G^dag).
DensityMatrix random_two_qubit_state(Rng& rng);

}  // namespace entbreak

#endif
