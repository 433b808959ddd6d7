#ifndef ENTBREAK_CORE_STATES_HPP
#define ENTBREAK_CORE_STATES_HPP

#include <cstddef>

#include "complex_matrix.hpp"
#include "eigen.hpp"

namespace entbreak {

enum class Side { A, B };

/// Bipartite density matrix with declared local dimensions. The product
/// basis is |i>_A (x) |j>_B with flat index i*dimB + j; every partial
/// operation below relies on that single convention.
class DensityMatrix {
public:
    /// Validates Hermiticity (1e-12), unit trace (1e-12) and positivity
    /// (min eigenvalue >= -1e-10) on construction.
    DensityMatrix(std::size_t dim_a, std::size_t dim_b, ComplexMatrix mat);

    std::size_t dim_a() const { return dim_a_; }
    std::size_t dim_b() const { return dim_b_; }
    std::size_t dim() const { return dim_a_ * dim_b_; }
    const ComplexMatrix& mat() const { return mat_; }

    std::size_t local_dim(Side s) const { return s == Side::A ? dim_a_ : dim_b_; }

private:
    std::size_t dim_a_, dim_b_;
    ComplexMatrix mat_;
};

class PureState {
public:
    PureState(std::size_t dim_a, std::size_t dim_b, std::vector<Complex> amplitudes);

    std::size_t dim_a() const { return dim_a_; }
    std::size_t dim_b() const { return dim_b_; }
    const std::vector<Complex>& amplitudes() const { return amps_; }

    DensityMatrix to_density() const;
    /// Schmidt coefficients, descending (singular values of the dA x dB
    /// amplitude matrix).
    std::vector<double> schmidt_coefficients() const;

private:
    std::size_t dim_a_, dim_b_;
    std::vector<Complex> amps_;
};

/// Transpose the indices of one subsystem only. Hermitian, trace 1.
ComplexMatrix partial_transpose(const DensityMatrix& rho, Side subsystem);

/// Reduced state of the kept subsystem.
ComplexMatrix partial_trace(const DensityMatrix& rho, Side keep);

/// basis^dag * m * basis; basis columns must be orthonormal (1e-10).
ComplexMatrix change_basis(const ComplexMatrix& m, const ComplexMatrix& basis);

/// Two-qubit Bell basis as columns, ordered {Phi+, Phi-, Psi+, Psi-}.
ComplexMatrix bell_basis();

/// Magic basis {Phi+, i Phi-, i Psi+, Psi-}: real combinations of its
/// columns are exactly the maximally entangled two-qubit states.
ComplexMatrix magic_basis();

/// Maximally entangled pure state (sum_i |ii>)/sqrt(d) on d (x) d.
PureState max_entangled(std::size_t d);

}  // namespace entbreak

#endif
