#include "channels.hpp"

#include <cmath>

#include "error.hpp"

namespace entbreak {

KrausChannel::KrausChannel(std::size_t dim_in, std::size_t dim_out, std::vector<ComplexMatrix> ops)
    : dim_in_(dim_in), dim_out_(dim_out), ops_(std::move(ops)) {
    if (ops_.empty())
        throw Error(ErrorCode::InvalidArgument, "KrausChannel: empty operator list");
    for (const auto& k : ops_)
        if (k.rows() != dim_out_ || k.cols() != dim_in_)
            throw Error(ErrorCode::DimensionMismatch, "KrausChannel: operator shape != dimOut x dimIn");
    if (completeness_defect() > tol::herm)
        throw Error(ErrorCode::InvalidArgument, "KrausChannel: completeness defect > 1e-12");
}

double KrausChannel::completeness_defect() const {
    ComplexMatrix s(dim_in_, dim_in_);
    for (const auto& k : ops_) s += k.dagger() * k;
    return max_abs_diff(s, ComplexMatrix::identity(dim_in_));
}

void ChannelFamily::validate(int grid_points) const {
    if (grid_points < 2)
        throw Error(ErrorCode::InvalidArgument, "ChannelFamily: grid must have >= 2 points");
    for (int i = 0; i < grid_points; ++i) {
        const double p = lo + (hi - lo) * i / (grid_points - 1);
        (void)generator(p);  // constructor enforces the invariants
    }
}

KrausChannel phase_damping(double lambda) {
    if (lambda < 0.0 || lambda > 1.0)
        throw Error(ErrorCode::ParameterOutOfRange, "phase_damping: lambda outside [0,1]");
    ComplexMatrix e0(2, 2), e1(2, 2);
    e0(0, 0) = 1.0;
    e0(1, 1) = std::sqrt(1.0 - lambda);
    e1(1, 1) = std::sqrt(lambda);
    return KrausChannel(2, 2, {e0, e1});
}

ChannelFamily phase_damping_family() {
    return ChannelFamily{"lambda", 0.0, 1.0, [](double l) { return phase_damping(l); }};
}

KrausChannel qutrit_dephase() {
    ComplexMatrix m0(3, 3), m1(3, 3);
    m0(0, 0) = 1.0;
    m0(1, 1) = 1.0;
    m1(2, 2) = 1.0;
    return KrausChannel(3, 3, {m0, m1});
}

KrausChannel qutrit_filter(double q) {
    if (q <= 0.0 || q >= 1.0)
        throw Error(ErrorCode::ParameterOutOfRange, "qutrit_filter: q outside (0,1)");
    ComplexMatrix a0(3, 3), a1(3, 3);
    a0(0, 0) = 1.0;
    a0(1, 1) = std::sqrt(1.0 - q);
    a0(2, 2) = std::sqrt(q);
    a1(1, 1) = std::sqrt(q);
    a1(2, 2) = std::sqrt(1.0 - q);
    return KrausChannel(3, 3, {a0, a1});
}

namespace {

ComplexMatrix lift(const ComplexMatrix& op, Side side, std::size_t other_dim) {
    const ComplexMatrix eye = ComplexMatrix::identity(other_dim);
    return side == Side::A ? kron(op, eye) : kron(eye, op);
}

}  // namespace

DensityMatrix apply_local(const KrausChannel& channel, const DensityMatrix& rho, Side side) {
    if (channel.dim_in() != rho.local_dim(side))
        throw Error(ErrorCode::DimensionMismatch, "apply_local: channel dimIn != subsystem dimension");
    const std::size_t other = side == Side::A ? rho.dim_b() : rho.dim_a();
    const std::size_t out_a = side == Side::A ? channel.dim_out() : rho.dim_a();
    const std::size_t out_b = side == Side::B ? channel.dim_out() : rho.dim_b();
    ComplexMatrix out(out_a * out_b, out_a * out_b);
    for (const auto& k : channel.ops()) {
        ComplexMatrix kl = lift(k, side, other);
        out += kl * rho.mat() * kl.dagger();
    }
    return DensityMatrix(out_a, out_b, std::move(out));
}

DensityMatrix local_unitary(const DensityMatrix& rho, const ComplexMatrix& u, Side side) {
    if (u.rows() != rho.local_dim(side))
        throw Error(ErrorCode::DimensionMismatch, "local_unitary: unitary size != subsystem dimension");
    if (!u.is_unitary(1e-12))
        throw Error(ErrorCode::NotUnitary, "local_unitary: matrix not unitary within 1e-12");
    const std::size_t other = side == Side::A ? rho.dim_b() : rho.dim_a();
    ComplexMatrix ul = lift(u, side, other);
    return DensityMatrix(rho.dim_a(), rho.dim_b(), ul * rho.mat() * ul.dagger());
}

DensityMatrix replace_with_00(const DensityMatrix& rho, double epsilon) {
    if (rho.dim_a() != 2 || rho.dim_b() != 2)
        throw Error(ErrorCode::UnsupportedDimension, "replace_with_00: two-qubit states only");
    if (epsilon < 0.0 || epsilon > 1.0)
        throw Error(ErrorCode::ParameterOutOfRange, "replace_with_00: epsilon outside [0,1]");
    ComplexMatrix m = rho.mat();
    m *= Complex{1.0 - epsilon, 0.0};
    m(0, 0) += epsilon;
    return DensityMatrix(2, 2, std::move(m));
}

DensityMatrix choi_matrix(const KrausChannel& channel) {
    const std::size_t d = channel.dim_in();
    if (channel.dim_out() != d || d > 3)
        throw Error(ErrorCode::DimensionMismatch, "choi_matrix: requires dimIn = dimOut = d <= 3");
    return apply_local(channel, max_entangled(d).to_density(), Side::A);
}

EntanglementBreakingResult is_entanglement_breaking(const KrausChannel& channel) {
    if (channel.dim_in() != 2 || channel.dim_out() != 2)
        throw Error(ErrorCode::UnsupportedDimension,
                    "is_entanglement_breaking: PPT is decisive only for qubit channels");
    const DensityMatrix choi = choi_matrix(channel);
    const double mu = min_eigenvalue(partial_transpose(choi, Side::A));
    return {mu >= -tol::psd, mu};
}

std::uint64_t Rng::next_u64() {
    // splitmix64; fixed algorithm keeps reports byte-identical across toolchains.
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

double Rng::gauss() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

namespace {

ComplexMatrix ginibre(Rng& rng, std::size_t rows, std::size_t cols) {
    ComplexMatrix g(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            g(r, c) = Complex{rng.gauss(), rng.gauss()};
    return g;
}

// Thin QR by modified Gram-Schmidt; returns the Q factor.
ComplexMatrix gram_schmidt(const ComplexMatrix& g) {
    ComplexMatrix q = g;
    for (std::size_t c = 0; c < q.cols(); ++c) {
        for (std::size_t p = 0; p < c; ++p) {
            Complex dot{0.0, 0.0};
            for (std::size_t r = 0; r < q.rows(); ++r) dot += std::conj(q(r, p)) * q(r, c);
            for (std::size_t r = 0; r < q.rows(); ++r) q(r, c) -= dot * q(r, p);
        }
        double n2 = 0.0;
        for (std::size_t r = 0; r < q.rows(); ++r) n2 += std::norm(q(r, c));
        const double inv = 1.0 / std::sqrt(n2);
        for (std::size_t r = 0; r < q.rows(); ++r) q(r, c) *= inv;
    }
    return q;
}

}  // namespace

KrausChannel random_qubit_channel(Rng& rng) {
    const ComplexMatrix q = gram_schmidt(ginibre(rng, 8, 2));
    std::vector<ComplexMatrix> ops;
    for (std::size_t k = 0; k < 4; ++k) {
        ComplexMatrix op(2, 2);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                op(r, c) = q(2 * k + r, c);
        ops.push_back(std::move(op));
    }
    return KrausChannel(2, 2, std::move(ops));
}

ComplexMatrix random_qubit_unitary(Rng& rng) {
    return gram_schmidt(ginibre(rng, 2, 2));
}

DensityMatrix random_two_qubit_state(Rng& rng) {
    const ComplexMatrix g = ginibre(rng, 4, 4);
    ComplexMatrix m = g * g.dagger();
    m *= Complex{1.0 / m.trace().real(), 0.0};
    // Re-symmetrize the scaled product to stay inside the 1e-12 gate.
    ComplexMatrix h(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
    for (std::size_t i = 0; i < 4; ++i) h(i, i) = h(i, i).real();
    return DensityMatrix(2, 2, std::move(h));
}

}  // namespace entbreak
