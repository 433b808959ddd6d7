#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/channels.hpp"
#include "core/error.hpp"
#include "core/measures.hpp"
#include "core/scenarios.hpp"
#include "test_util.hpp"

using namespace entbreak;
using testutil::real_mat;

TEST_CASE("phase damping endpoints and critical point") {
    const KrausChannel id = phase_damping(0.0);
    CHECK(max_abs_diff(id.ops()[0], ComplexMatrix::identity(2)) == 0.0);
    CHECK(id.ops()[1].max_abs() == 0.0);

    const KrausChannel full = phase_damping(1.0);
    CHECK(max_abs_diff(full.ops()[0], ComplexMatrix::diag({1.0, 0.0})) == 0.0);
    CHECK(max_abs_diff(full.ops()[1], ComplexMatrix::diag({0.0, 1.0})) == 0.0);

    CHECK(phase_damping(paper::lambda1()).completeness_defect() <= 1e-15);
    CHECK_THROWS_AS(phase_damping(-0.01), Error);
    CHECK_THROWS_AS(phase_damping(1.01), Error);
}

TEST_CASE("channel family completeness over a parameter grid") {
    const ChannelFamily fam = phase_damping_family();
    fam.validate(101);
    for (int i = 0; i <= 1000; ++i)
        CHECK(phase_damping(i / 1000.0).completeness_defect() <= 1e-12);
}

TEST_CASE("qutrit dephasing") {
    const KrausChannel ch = qutrit_dephase();
    CHECK(ch.completeness_defect() == 0.0);

    // psi1 -> (|11><11| + |22><22|)/2
    const DensityMatrix out1 = apply_local(ch, paper::qutrit_psi1().to_density(), Side::A);
    ComplexMatrix expected(9, 9);
    expected(4, 4) = 0.5;
    expected(8, 8) = 0.5;
    CHECK(max_abs_diff(out1.mat(), expected) <= 1e-15);

    // psi2 unchanged
    const DensityMatrix psi2 = paper::qutrit_psi2(0.3).to_density();
    const DensityMatrix out2 = apply_local(ch, psi2, Side::A);
    CHECK(max_abs_diff(out2.mat(), psi2.mat()) <= 1e-15);
}

TEST_CASE("apply_local reproduces the printed output matrices") {
    const double lambda = 0.37;
    const double s = std::sqrt(1.0 - lambda);

    const DensityMatrix out1 = apply_local(phase_damping(lambda), paper::rho1_in(), Side::A);
    const ComplexMatrix expected1 =
        Complex{1.0 / 3.0, 0.0} * real_mat(4, {2, 0, 0, s,
                                               0, 0, 0, 0,
                                               0, 0, 0, 0,
                                               s, 0, 0, 1});
    CHECK(max_abs_diff(out1.mat(), expected1) <= 1e-14);

    const DensityMatrix out2 = apply_local(phase_damping(lambda), paper::rho2_in(), Side::A);
    const ComplexMatrix expected2 =
        Complex{1.0 / 6.0, 0.0} * real_mat(4, {2, -1, 2 * s, s,
                                               -1, 1, -s, -s,
                                               2 * s, -s, 2, 1,
                                               s, -s, 1, 1});
    CHECK(max_abs_diff(out2.mat(), expected2) <= 1e-14);

    // identity channel leaves input unchanged
    const DensityMatrix same = apply_local(phase_damping(0.0), paper::rho2_in(), Side::A);
    CHECK(max_abs_diff(same.mat(), paper::rho2_in().mat()) == 0.0);

    // dimension mismatch
    CHECK_THROWS_AS(apply_local(qutrit_dephase(), paper::rho1_in(), Side::A), Error);
}

TEST_CASE("local_unitary") {
    const DensityMatrix rho2 = local_unitary(paper::rho1_in(), paper::unitary_ua(), Side::A);
    const ComplexMatrix expected =
        Complex{1.0 / 6.0, 0.0} * real_mat(4, {2, -1, 2, 1,
                                               -1, 1, -1, -1,
                                               2, -1, 2, 1,
                                               1, -1, 1, 1});
    CHECK(max_abs_diff(rho2.mat(), expected) <= 1e-14);

    // u then u^dag restores the input
    const DensityMatrix back = local_unitary(rho2, paper::unitary_ua().dagger(), Side::A);
    CHECK(max_abs_diff(back.mat(), paper::rho1_in().mat()) <= 1e-14);

    // identity
    const DensityMatrix same = local_unitary(rho2, ComplexMatrix::identity(2), Side::B);
    CHECK(max_abs_diff(same.mat(), rho2.mat()) == 0.0);

    // non-unitary rejected
    CHECK_THROWS_AS(local_unitary(rho2, ComplexMatrix::diag({1.0, 0.5}), Side::A), Error);
}

TEST_CASE("replace_with_00") {
    // eps=0 unchanged, eps=1 -> |00><00|
    const DensityMatrix rho1 = paper::rho1_in();
    CHECK(max_abs_diff(replace_with_00(rho1, 0.0).mat(), rho1.mat()) == 0.0);
    ComplexMatrix proj(4, 4);
    proj(0, 0) = 1.0;
    CHECK(max_abs_diff(replace_with_00(rho1, 1.0).mat(), proj) == 0.0);

    // applied to rho1_in gives rho3_in with t = 2(1-eps)/3
    const double eps = 0.4;
    const double t = 2.0 * (1.0 - eps) / 3.0;
    CHECK(max_abs_diff(replace_with_00(rho1, eps).mat(), paper::rho3_in(t).mat()) <= 1e-15);

    CHECK_THROWS_AS(replace_with_00(rho1, 1.5), Error);
}

TEST_CASE("qutrit filter") {
    const KrausChannel f = qutrit_filter(0.3);
    CHECK(f.completeness_defect() <= 1e-15);
    CHECK_THROWS_AS(qutrit_filter(0.0), Error);
    CHECK_THROWS_AS(qutrit_filter(1.0), Error);

    // q -> 1/2: both branches have equal Schmidt coefficients
    const QutritReport rep = qutrit_example(0.5);
    for (const auto& b : rep.branches) {
        REQUIRE(b.schmidt.size() >= 2);
        CHECK(std::abs(b.schmidt[0] - b.schmidt[1]) <= 1e-12);
    }
}

TEST_CASE("choi matrix") {
    // identity channel -> phi_plus
    ComplexMatrix e0 = ComplexMatrix::identity(2);
    const KrausChannel id(2, 2, {e0});
    CHECK(max_abs_diff(choi_matrix(id).mat(), paper::phi_plus().mat()) <= 1e-15);

    // fully dephased Bell state
    CHECK(max_abs_diff(choi_matrix(phase_damping(1.0)).mat(),
                       ComplexMatrix::diag({0.5, 0.0, 0.0, 0.5})) <= 1e-15);

    // negativity of the phase-damping Choi state is sqrt(1-lambda)
    for (double lambda : {0.0, 0.25, 0.5, 0.97}) {
        const double n = negativity(choi_matrix(phase_damping(lambda))).first;
        CHECK(std::abs(n - std::sqrt(1.0 - lambda)) <= 1e-12);
    }
}

TEST_CASE("entanglement breaking test") {
    CHECK_FALSE(is_entanglement_breaking(phase_damping(0.5)).breaking);
    CHECK_FALSE(is_entanglement_breaking(phase_damping(0.999)).breaking);
    CHECK(is_entanglement_breaking(phase_damping(1.0)).breaking);

    // fully depolarizing channel via 4 normalized Pauli Kraus operators
    ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
    sx(0, 1) = 0.5; sx(1, 0) = 0.5;
    sy(0, 1) = Complex{0.0, -0.5}; sy(1, 0) = Complex{0.0, 0.5};
    sz(0, 0) = 0.5; sz(1, 1) = -0.5;
    ComplexMatrix si = ComplexMatrix::identity(2);
    si *= Complex{0.5, 0.0};
    const KrausChannel depol(2, 2, {si, sx, sy, sz});
    CHECK(is_entanglement_breaking(depol).breaking);

    // refuses dimensions where PPT is not decisive
    CHECK_THROWS_AS(is_entanglement_breaking(qutrit_dephase()), Error);
}

TEST_CASE("apply_local preserves trace and positivity on random inputs") {
    Rng rng(123);
    for (int i = 0; i < 1000; ++i) {
        const KrausChannel ch = random_qubit_channel(rng);
        const DensityMatrix rho = random_two_qubit_state(rng);
        const DensityMatrix out = apply_local(ch, rho, Side::A);
        CHECK(std::abs(out.mat().trace().real() - 1.0) <= 1e-12);
        CHECK(min_eigenvalue(out.mat()) >= -1e-10);
    }
}

TEST_CASE("operations on different sides commute") {
    Rng rng(321);
    for (int i = 0; i < 200; ++i) {
        const KrausChannel ch = random_qubit_channel(rng);
        const ComplexMatrix u = random_qubit_unitary(rng);
        const DensityMatrix rho = random_two_qubit_state(rng);
        const DensityMatrix ab = local_unitary(apply_local(ch, rho, Side::A), u, Side::B);
        const DensityMatrix ba = apply_local(ch, local_unitary(rho, u, Side::B), Side::A);
        CHECK(max_abs_diff(ab.mat(), ba.mat()) <= 1e-12);
    }
}

TEST_CASE("local unitaries preserve every entanglement quantity") {
    Rng rng(555);
    for (int i = 0; i < 1000; ++i) {
        const DensityMatrix rho = random_two_qubit_state(rng);
        const ComplexMatrix u = random_qubit_unitary(rng);
        const Side side = (i % 2 == 0) ? Side::A : Side::B;
        const DensityMatrix rotated = local_unitary(rho, u, side);
        CHECK(std::abs(negativity(rotated).first - negativity(rho).first) <= 1e-10);
        CHECK(std::abs(concurrence(rotated) - concurrence(rho)) <= 1e-10);
        CHECK(std::abs(entanglement_of_formation(rotated) - entanglement_of_formation(rho)) <=
              1e-10);
    }
}

TEST_CASE("local unitaries preserve the spectrum") {
    Rng rng(777);
    const DensityMatrix rho = random_two_qubit_state(rng);
    const ComplexMatrix u = random_qubit_unitary(rng);
    const EigenResult before = hermitian_eigen(rho.mat());
    const EigenResult after = hermitian_eigen(local_unitary(rho, u, Side::A).mat());
    for (int k = 0; k < 4; ++k)
        CHECK(std::abs(before.eigenvalues[k] - after.eigenvalues[k]) <= 1e-10);
}
