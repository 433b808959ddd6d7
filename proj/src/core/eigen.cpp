#include "eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "error.hpp"

namespace entbreak {

namespace {

constexpr std::size_t kMaxDim = 16;
constexpr int kMaxSweeps = 100;
constexpr double kOffThreshold = 1e-14;

double off_diagonal_frobenius(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

}  // namespace

EigenResult hermitian_eigen(const ComplexMatrix& m) {
    if (!m.is_square())
        throw Error(ErrorCode::DimensionMismatch, "hermitian_eigen: matrix not square");
    if (m.rows() > kMaxDim)
        throw Error(ErrorCode::UnsupportedDimension, "hermitian_eigen: dimension > 16");
    if (m.hermiticity_defect() > 1e-10)
        throw Error(ErrorCode::NotHermitian, "hermitian_eigen: Hermiticity defect exceeds 1e-10");

    const std::size_t n = m.rows();

    // Symmetrize to remove sub-tolerance drift before iterating.
    ComplexMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(1.0, a.frobenius_norm());

    bool converged = (n <= 1);
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex c = a(p, q);
                const double r = std::abs(c);
                if (r <= kOffThreshold * scale / static_cast<double>(n)) continue;

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * r, app - aqq);
                const double ct = std::cos(theta);
                const double st = std::sin(theta);
                const Complex phase = c / r;  // e^{i phi}

                // Column update: A <- A R with R(p,p)=ct, R(q,p)=st e^{-i phi},
                // R(p,q)=-st e^{i phi}, R(q,q)=ct.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * ct + akq * st * std::conj(phase);
                    a(k, q) = -akp * st * phase + akq * ct;
                }
                // Row update: A <- R^dag A.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = apk * ct + aqk * st * phase;
                    a(q, k) = -apk * st * std::conj(phase) + aqk * ct;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                // Accumulate eigenvectors: V <- V R.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * ct + vkq * st * std::conj(phase);
                    v(k, q) = -vkp * st * phase + vkq * ct;
                }
            }
        }
        converged = off_diagonal_frobenius(a) <= kOffThreshold * scale;
    }
    if (!converged)
        throw Error(ErrorCode::NotConverged, "hermitian_eigen: Jacobi sweep cap reached");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigenResult result;
    result.eigenvalues.resize(n);
    result.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        result.eigenvalues[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) result.eigenvectors(i, j) = v(i, order[j]);
    }
    return result;
}

double min_eigenvalue(const ComplexMatrix& m) {
    return hermitian_eigen(m).eigenvalues.front();
}

}  // namespace entbreak
