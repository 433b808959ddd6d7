#include "states.hpp"

#include <cmath>

#include "error.hpp"

namespace entbreak {

DensityMatrix::DensityMatrix(std::size_t dim_a, std::size_t dim_b, ComplexMatrix mat)
    : dim_a_(dim_a), dim_b_(dim_b), mat_(std::move(mat)) {
    if (dim_a_ == 0 || dim_b_ == 0)
        throw Error(ErrorCode::InvalidArgument, "DensityMatrix: zero local dimension");
    const std::size_t d = dim_a_ * dim_b_;
    if (mat_.rows() != d || mat_.cols() != d)
        throw Error(ErrorCode::DimensionMismatch, "DensityMatrix: matrix size != dimA*dimB");
    if (mat_.hermiticity_defect() > tol::herm)
        throw Error(ErrorCode::NotHermitian, "DensityMatrix: Hermiticity defect > 1e-12");
    if (std::abs(mat_.trace() - Complex{1.0, 0.0}) > tol::herm)
        throw Error(ErrorCode::InvalidArgument, "DensityMatrix: trace deviates from 1 by > 1e-12");
    if (min_eigenvalue(mat_) < -tol::psd)
        throw Error(ErrorCode::InvalidArgument, "DensityMatrix: min eigenvalue < -1e-10");
}

PureState::PureState(std::size_t dim_a, std::size_t dim_b, std::vector<Complex> amplitudes)
    : dim_a_(dim_a), dim_b_(dim_b), amps_(std::move(amplitudes)) {
    if (amps_.size() != dim_a_ * dim_b_)
        throw Error(ErrorCode::DimensionMismatch, "PureState: amplitude count != dimA*dimB");
    double n2 = 0.0;
    for (const auto& z : amps_) n2 += std::norm(z);
    if (std::abs(n2 - 1.0) > 1e-12)
        throw Error(ErrorCode::InvalidArgument, "PureState: squared norm deviates from 1 by > 1e-12");
}

DensityMatrix PureState::to_density() const {
    const std::size_t d = amps_.size();
    ComplexMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            m(r, c) = amps_[r] * std::conj(amps_[c]);
    return DensityMatrix(dim_a_, dim_b_, std::move(m));
}

std::vector<double> PureState::schmidt_coefficients() const {
    // Singular values of the amplitude matrix M via eigenvalues of M M^dag.
    ComplexMatrix m(dim_a_, dim_b_);
    for (std::size_t i = 0; i < dim_a_; ++i)
        for (std::size_t j = 0; j < dim_b_; ++j)
            m(i, j) = amps_[i * dim_b_ + j];
    EigenResult eig = hermitian_eigen(m * m.dagger());
    std::vector<double> sv;
    sv.reserve(dim_a_);
    for (auto it = eig.eigenvalues.rbegin(); it != eig.eigenvalues.rend(); ++it)
        sv.push_back(std::sqrt(std::max(0.0, *it)));
    return sv;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, Side subsystem) {
    const std::size_t da = rho.dim_a(), db = rho.dim_b();
    const ComplexMatrix& m = rho.mat();
    ComplexMatrix out(da * db, da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < da; ++k)
                for (std::size_t l = 0; l < db; ++l) {
                    // element <ij| m |kl>
                    const Complex v = m(i * db + j, k * db + l);
                    if (subsystem == Side::A)
                        out(k * db + j, i * db + l) = v;
                    else
                        out(i * db + l, k * db + j) = v;
                }
    return out;
}

ComplexMatrix partial_trace(const DensityMatrix& rho, Side keep) {
    const std::size_t da = rho.dim_a(), db = rho.dim_b();
    const ComplexMatrix& m = rho.mat();
    if (keep == Side::A) {
        ComplexMatrix out(da, da);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t k = 0; k < da; ++k)
                for (std::size_t j = 0; j < db; ++j)
                    out(i, k) += m(i * db + j, k * db + j);
        return out;
    }
    ComplexMatrix out(db, db);
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t l = 0; l < db; ++l)
            for (std::size_t i = 0; i < da; ++i)
                out(j, l) += m(i * db + j, i * db + l);
    return out;
}

ComplexMatrix change_basis(const ComplexMatrix& m, const ComplexMatrix& basis) {
    if (!m.is_square() || basis.rows() != m.rows() || basis.cols() != m.rows())
        throw Error(ErrorCode::DimensionMismatch, "change_basis: dimension mismatch");
    if (!basis.is_unitary(1e-10))
        throw Error(ErrorCode::NotUnitaryBasis, "change_basis: basis columns not orthonormal");
    return basis.dagger() * m * basis;
}

ComplexMatrix bell_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix b(4, 4);
    // columns: Phi+ = (|00>+|11>)/sqrt2, Phi- = (|00>-|11>)/sqrt2,
    //          Psi+ = (|01>+|10>)/sqrt2, Psi- = (|01>-|10>)/sqrt2
    b(0, 0) = s; b(3, 0) = s;
    b(0, 1) = s; b(3, 1) = -s;
    b(1, 2) = s; b(2, 2) = s;
    b(1, 3) = s; b(2, 3) = -s;
    return b;
}

ComplexMatrix magic_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex is{0.0, s};
    ComplexMatrix b(4, 4);
    b(0, 0) = s;  b(3, 0) = s;    // Phi+
    b(0, 1) = is; b(3, 1) = -is;  // i Phi-
    b(1, 2) = is; b(2, 2) = is;   // i Psi+
    b(1, 3) = s;  b(2, 3) = -s;   // Psi-
    return b;
}

PureState max_entangled(std::size_t d) {
    std::vector<Complex> amps(d * d, Complex{0.0, 0.0});
    const double a = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t i = 0; i < d; ++i) amps[i * d + i] = a;
    return PureState(d, d, std::move(amps));
}

}  // namespace entbreak
