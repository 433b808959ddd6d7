#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/eigen.hpp"
#include "core/error.hpp"
#include "core/scenarios.hpp"
#include "core/states.hpp"
#include "test_util.hpp"

using namespace entbreak;
using testutil::random_hermitian;
using testutil::random_matrix;
using testutil::random_psd;
using testutil::real_mat;

TEST_CASE("kron identity and hand-expanded cases") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(max_abs_diff(kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);

    // kron(diag(1,0), diag(0,1)) = diag(0,1,0,0)
    const ComplexMatrix d = kron(ComplexMatrix::diag({1.0, 0.0}), ComplexMatrix::diag({0.0, 1.0}));
    CHECK(max_abs_diff(d, ComplexMatrix::diag({0.0, 1.0, 0.0, 0.0})) == 0.0);
}

TEST_CASE("kron(U_A, I) on rho1_in reproduces the printed rho2_in") {
    const ComplexMatrix lifted = kron(paper::unitary_ua(), ComplexMatrix::identity(2));
    const ComplexMatrix got = lifted * paper::rho1_in().mat() * lifted.dagger();
    const ComplexMatrix expected =
        Complex{1.0 / 6.0, 0.0} * real_mat(4, {2, -1, 2, 1,
                                               -1, 1, -1, -1,
                                               2, -1, 2, 1,
                                               1, -1, 1, 1});
    CHECK(max_abs_diff(got, expected) <= 1e-15);
}

TEST_CASE("kron associativity and bilinearity on random inputs") {
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        const ComplexMatrix a = random_matrix(rng, 2, 2);
        const ComplexMatrix b = random_matrix(rng, 3, 2);
        const ComplexMatrix c = random_matrix(rng, 2, 3);
        CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) <= 1e-12);
        const ComplexMatrix d = random_matrix(rng, 2, 2);
        CHECK(max_abs_diff(kron(a + d, b), kron(a, b) + kron(d, b)) <= 1e-12);
        const Complex s{rng.uniform(), rng.uniform()};
        CHECK(max_abs_diff(kron(s * a, b), s * kron(a, b)) <= 1e-12);
    }
}

TEST_CASE("hermitian_eigen on diagonal input") {
    const EigenResult r = hermitian_eigen(ComplexMatrix::diag({3.0, 1.0, 2.0}));
    REQUIRE(r.eigenvalues.size() == 3);
    CHECK(r.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(r.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("partial transpose of phi_plus has min eigenvalue -1/2") {
    // Oracle: the PT is block diagonal with an explicit 2x2 swap block,
    // characteristic polynomial gives eigenvalues {1/2, 1/2, 1/2, -1/2}.
    const EigenResult r = hermitian_eigen(partial_transpose(paper::phi_plus(), Side::A));
    CHECK(r.eigenvalues.front() == doctest::Approx(-0.5).epsilon(1e-12));
    for (int k = 1; k < 4; ++k) CHECK(r.eigenvalues[k] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("partial transpose of rho1_out at lambda=0 has min eigenvalue -1/3") {
    const DensityMatrix out = apply_local(phase_damping(0.0), paper::rho1_in(), Side::A);
    CHECK(min_eigenvalue(partial_transpose(out, Side::A)) == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input and large input") {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eigen(m), Error);
    CHECK_THROWS_AS(hermitian_eigen(ComplexMatrix::identity(17)), Error);
}

TEST_CASE("eigen reconstruction property, 4x4 and 9x9") {
    Rng rng(7);
    for (std::size_t n : {std::size_t{4}, std::size_t{9}}) {
        for (int i = 0; i < 500; ++i) {
            const ComplexMatrix m = random_hermitian(rng, n);
            const EigenResult r = hermitian_eigen(m);
            // V diag(l) V^dag
            ComplexMatrix rec(n, n);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b)
                        rec(a, b) += r.eigenvalues[k] * r.eigenvectors(a, k) *
                                     std::conj(r.eigenvectors(b, k));
            CHECK(max_abs_diff(rec, m) <= 1e-10);
            // Gram matrix of eigenvectors = identity
            CHECK(max_abs_diff(r.eigenvectors.dagger() * r.eigenvectors,
                               ComplexMatrix::identity(n)) <= 1e-10);
            double trace_sum = 0.0;
            for (double l : r.eigenvalues) trace_sum += l;
            CHECK(std::abs(trace_sum - m.trace().real()) <= 1e-10);
        }
    }
}

TEST_CASE("partial_transpose basics") {
    Rng rng(3);
    // product state: rho_A (x) rho_B -> rho_A^T (x) rho_B, still PSD
    ComplexMatrix a = random_psd(rng, 2);
    a *= Complex{1.0 / a.trace().real(), 0.0};
    ComplexMatrix b = random_psd(rng, 2);
    b *= Complex{1.0 / b.trace().real(), 0.0};
    const DensityMatrix prod(2, 2, kron(a, b));
    const ComplexMatrix pt = partial_transpose(prod, Side::A);
    CHECK(max_abs_diff(pt, kron(a.transpose(), b)) <= 1e-14);
    CHECK(min_eigenvalue(pt) >= -1e-12);

    // trace and Hermiticity preservation (entry-wise symmetric construction)
    for (int i = 0; i < 100; ++i) {
        const DensityMatrix rho = random_two_qubit_state(rng);
        const ComplexMatrix once = partial_transpose(rho, Side::B);
        CHECK(once.hermiticity_defect() == 0.0);
        CHECK(std::abs(once.trace() - rho.mat().trace()) == 0.0);
    }
    // involution: PT of a separable mixture is PSD, so it round-trips
    // through a valid DensityMatrix
    for (int i = 0; i < 100; ++i) {
        ComplexMatrix mix(4, 4);
        for (int k = 0; k < 3; ++k) {
            ComplexMatrix pa = random_psd(rng, 2), pb = random_psd(rng, 2);
            pa *= Complex{1.0 / pa.trace().real(), 0.0};
            pb *= Complex{1.0 / pb.trace().real(), 0.0};
            mix += Complex{1.0 / 3.0, 0.0} * kron(pa, pb);
        }
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                mix(r, c) = 0.5 * (mix(r, c) + std::conj(mix(c, r)));
        const DensityMatrix rho(2, 2, mix);
        const DensityMatrix wrapped(2, 2, partial_transpose(rho, Side::B));
        CHECK(max_abs_diff(partial_transpose(wrapped, Side::B), rho.mat()) == 0.0);
    }
}

TEST_CASE("partial_trace of known states") {
    // phi_plus keep A -> I/2
    const ComplexMatrix red = partial_trace(paper::phi_plus(), Side::A);
    CHECK(max_abs_diff(red, Complex{0.5, 0.0} * ComplexMatrix::identity(2)) <= 1e-15);

    // psi2 with q=1/4, keep A -> diag(1/4, 3/4, 0)
    const ComplexMatrix qred = partial_trace(paper::qutrit_psi2(0.25).to_density(), Side::A);
    CHECK(max_abs_diff(qred, ComplexMatrix::diag({0.25, 0.75, 0.0})) <= 1e-15);
}

TEST_CASE("partial_trace(kron(a,b)) = a*trace(b) property") {
    Rng rng(19);
    for (int i = 0; i < 200; ++i) {
        ComplexMatrix a = random_psd(rng, 2);
        ComplexMatrix b = random_psd(rng, 2);
        const double tr = (kron(a, b)).trace().real();
        ComplexMatrix normalized = kron(a, b);
        normalized *= Complex{1.0 / tr, 0.0};
        const DensityMatrix rho(2, 2, normalized);
        ComplexMatrix expect_a = a;
        expect_a *= Complex{b.trace().real() / tr, 0.0};
        CHECK(max_abs_diff(partial_trace(rho, Side::A), expect_a) <= 1e-12);
        ComplexMatrix expect_b = b;
        expect_b *= Complex{a.trace().real() / tr, 0.0};
        CHECK(max_abs_diff(partial_trace(rho, Side::B), expect_b) <= 1e-12);
    }
}

TEST_CASE("change_basis") {
    const DensityMatrix rho2 = paper::rho2_in();
    // identity basis leaves the matrix unchanged
    CHECK(max_abs_diff(change_basis(rho2.mat(), ComplexMatrix::identity(4)), rho2.mat()) == 0.0);

    // rho2_in is Bell-diagonal on the U_A-rotated Bell basis with entries
    // {5/6, 0, 0, 1/6} in some order (the basis its construction singles
    // out; on the unrotated Bell basis the diagonal is (5/12,1/12,1/12,5/12)).
    const ComplexMatrix rotated_bell =
        kron(paper::unitary_ua(), ComplexMatrix::identity(2)) * bell_basis();
    const ComplexMatrix in_bell = change_basis(rho2.mat(), rotated_bell);
    std::vector<double> diag;
    for (int i = 0; i < 4; ++i) diag.push_back(in_bell(i, i).real());
    std::sort(diag.begin(), diag.end());
    CHECK(std::abs(diag[0]) <= 1e-12);
    CHECK(std::abs(diag[1]) <= 1e-12);
    CHECK(std::abs(diag[2] - 1.0 / 6.0) <= 1e-12);
    CHECK(std::abs(diag[3] - 5.0 / 6.0) <= 1e-12);

    // phi_plus in the Bell basis is diag(1,0,0,0) up to ordering
    const ComplexMatrix pb = change_basis(paper::phi_plus().mat(), bell_basis());
    CHECK(std::abs(pb(0, 0).real() - 1.0) <= 1e-14);

    // non-orthonormal basis rejected
    ComplexMatrix bad = ComplexMatrix::identity(4);
    bad(0, 0) = 2.0;
    CHECK_THROWS_AS(change_basis(rho2.mat(), bad), Error);
}

TEST_CASE("DensityMatrix invariant enforcement") {
    // trace != 1
    CHECK_THROWS_AS(DensityMatrix(2, 2, ComplexMatrix::identity(4)), Error);
    // non-Hermitian
    ComplexMatrix m = ComplexMatrix::diag({0.5, 0.5, 0.0, 0.0});
    m(0, 1) = Complex{0.0, 0.1};
    CHECK_THROWS_AS(DensityMatrix(2, 2, m), Error);
    // negative eigenvalue
    CHECK_THROWS_AS(DensityMatrix(2, 2, ComplexMatrix::diag({1.5, -0.5, 0.0, 0.0})), Error);
}
