#include "measures.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace entbreak {

std::pair<double, double> negativity(const DensityMatrix& rho) {
    const double mu = min_eigenvalue(partial_transpose(rho, Side::A));
    return {std::max(0.0, -2.0 * mu), mu};
}

namespace {

bool verify_decomposition(const DensityMatrix& rho, const std::vector<ProductTerm>& terms) {
    ComplexMatrix sum(rho.dim(), rho.dim());
    for (const auto& t : terms) {
        if (t.weight < -1e-14) return false;
        if (t.ket_a.size() != rho.dim_a() || t.ket_b.size() != rho.dim_b()) return false;
        std::vector<Complex> prod(rho.dim());
        for (std::size_t i = 0; i < rho.dim_a(); ++i)
            for (std::size_t j = 0; j < rho.dim_b(); ++j)
                prod[i * rho.dim_b() + j] = t.ket_a[i] * t.ket_b[j];
        for (std::size_t r = 0; r < rho.dim(); ++r)
            for (std::size_t c = 0; c < rho.dim(); ++c)
                sum(r, c) += t.weight * prod[r] * std::conj(prod[c]);
    }
    return max_abs_diff(sum, rho.mat()) <= 1e-10;
}

}  // namespace

SeparabilityVerdict ppt_separability(const DensityMatrix& rho,
                                     const std::vector<ProductTerm>* decomposition) {
    const double mu = negativity(rho).second;
    const bool ppt = mu >= -tol::psd;
    if (!ppt) return SeparabilityVerdict::Entangled;
    if (rho.dim_a() * rho.dim_b() <= 6) return SeparabilityVerdict::Separable;
    if (decomposition && verify_decomposition(rho, *decomposition))
        return SeparabilityVerdict::Separable;
    return SeparabilityVerdict::Undecided;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
    EigenResult eig = hermitian_eigen(m);
    const std::size_t n = m.rows();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = std::sqrt(std::max(0.0, eig.eigenvalues[k]));
        if (s == 0.0) continue;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                out(r, c) += s * eig.eigenvectors(r, k) * std::conj(eig.eigenvectors(c, k));
    }
    return out;
}

double concurrence(const DensityMatrix& rho) {
    if (rho.dim_a() != 2 || rho.dim_b() != 2)
        throw Error(ErrorCode::UnsupportedDimension, "concurrence: two-qubit states only");
    // Spin flip rho~ = (sy (x) sy) conj(rho) (sy (x) sy), conjugation in
    // the computational basis. The eigenvalues of rho rho~ match those of
    // the Hermitian matrix sqrt(rho) rho~ sqrt(rho).
    ComplexMatrix sy(2, 2);
    sy(0, 1) = Complex{0.0, -1.0};
    sy(1, 0) = Complex{0.0, 1.0};
    const ComplexMatrix yy = kron(sy, sy);
    const ComplexMatrix flipped = yy * rho.mat().conj() * yy;
    const ComplexMatrix root = psd_sqrt(rho.mat());
    ComplexMatrix h = root * flipped * root;
    // Symmetrize sub-tolerance drift before the eigensolve.
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = r; c < 4; ++c) {
            const Complex v = 0.5 * (h(r, c) + std::conj(h(c, r)));
            h(r, c) = v;
            h(c, r) = std::conj(v);
        }
    EigenResult eig = hermitian_eigen(h);
    double s[4];
    for (int k = 0; k < 4; ++k)
        s[k] = std::sqrt(std::max(0.0, eig.eigenvalues[3 - k]));  // descending
    return std::clamp(s[0] - s[1] - s[2] - s[3], 0.0, 1.0);
}

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0)
        throw Error(ErrorCode::ParameterOutOfRange, "binary_entropy: p outside [0,1]");
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

double entanglement_of_formation(const DensityMatrix& rho) {
    const double c = concurrence(rho);
    return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

std::vector<double> bell_diagonal_spectrum(const DensityMatrix& rho) {
    if (rho.dim_a() != 2 || rho.dim_b() != 2)
        throw Error(ErrorCode::UnsupportedDimension, "bell_diagonal_spectrum: two-qubit states only");
    const ComplexMatrix in_magic = change_basis(rho.mat(), magic_basis());
    ComplexMatrix re(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            re(r, c) = 0.5 * (in_magic(r, c).real() + in_magic(c, r).real());
    EigenResult eig = hermitian_eigen(re);
    std::vector<double> out(eig.eigenvalues.rbegin(), eig.eigenvalues.rend());
    for (double& l : out) l = std::max(0.0, l);
    return out;
}

double g_lower_bound(const DensityMatrix& rho) {
    double g = 1.0;
    for (double l : bell_diagonal_spectrum(rho))
        if (l > 0.0) g += l * std::log2(l);
    return g;
}

MeasureReport measure_report(const DensityMatrix& rho,
                             const std::vector<ProductTerm>* decomposition) {
    MeasureReport r;
    std::tie(r.negativity, r.min_pt_eigenvalue) = negativity(rho);
    r.ppt_verdict = r.min_pt_eigenvalue >= -tol::psd ? PptVerdict::PPT : PptVerdict::NPT;
    r.separability = ppt_separability(rho, decomposition);
    if (rho.dim_a() == 2 && rho.dim_b() == 2) {
        r.concurrence = concurrence(rho);
        r.entanglement_of_formation =
            binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - *r.concurrence * *r.concurrence))));
        r.g_bound = g_lower_bound(rho);
    }
    return r;
}

}  // namespace entbreak
