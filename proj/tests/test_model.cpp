// Model parameters, derived coupling scales, and the σ_x-representation
// transform. The critical scale anchors were cross-checked by independent
// arithmetic: g_c(Δ=10) = √(1+√(1+(√10/2)⁴)) = 1.921609326467597.

#include "doctest.h"

#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "qrab/errors.hpp"
#include "qrab/exact_diag.hpp"
#include "qrab/model.hpp"

using namespace qrab;

TEST_CASE("derived scales at delta = 10") {
    const ModelParams p = derive_scales(10.0, 1.0);
    CHECK(p.g_c0 == doctest::Approx(std::sqrt(10.0) / 2.0).epsilon(1e-14));
    CHECK(p.g_c == doctest::Approx(1.921609326467597).epsilon(1e-12));
    CHECK(p.g_prime == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(p.ratio == 10.0);
}

TEST_CASE("g_c approaches g_c0 at large ratio") {
    const ModelParams p = derive_scales(1e4, 1.0);
    CHECK(p.g_c0 == doctest::Approx(50.0).epsilon(1e-14));
    CHECK(p.g_c / p.g_c0 - 1.0 < 3e-4);
    CHECK(p.g_c > p.g_c0);
}

TEST_CASE("zero-coupling scales") {
    const ModelParams p = derive_scales(1.0, 0.0);
    CHECK(p.g_prime == 0.0);
    CHECK(p.eps0 == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(derive_scales(-1.0, 0.0), DomainError);
    CHECK_THROWS_AS(derive_scales(1.0, -0.5), DomainError);
    CHECK_THROWS_AS(derive_scales(std::nan(""), 0.0), DomainError);
    CHECK_THROWS_AS(model_from_ratio(10.0, -0.1), DomainError);
    // Δ = 0 is a legitimate analytic limit.
    CHECK_NOTHROW(derive_scales(0.0, 1.0));
}

TEST_CASE("model_from_ratio resolves absolute coupling") {
    const ModelParams p = model_from_ratio(10.0, 2.0);
    CHECK(p.g == doctest::Approx(2.0 * 1.921609326467597).epsilon(1e-12));
    CHECK(p.delta == 10.0);
}

TEST_CASE("g_c is strictly increasing in delta and above max(1, g_c0)") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(0.05, 200.0);
    double prev_delta = 0.0, prev_gc = derive_scales(0.0, 0.0).g_c;
    CHECK(prev_gc == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    for (int i = 0; i < 200; ++i) {
        const double delta = prev_delta + dist(rng);
        const ModelParams p = derive_scales(delta, 0.3);
        CHECK(p.g_c > prev_gc);
        CHECK(p.g_c >= std::max(1.0, p.g_c0));
        prev_delta = delta;
        prev_gc = p.g_c;
    }
}

TEST_CASE("sigma_x branch descriptors") {
    const ModelParams p = derive_scales(2.0, 1.5);
    const OscillatorForm plus = hamiltonian_sigma_x(p, +1);
    const OscillatorForm minus = hamiltonian_sigma_x(p, -1);
    CHECK(plus.center == doctest::Approx(-p.g_prime).epsilon(1e-15));
    CHECK(minus.center == doctest::Approx(p.g_prime).epsilon(1e-15));
    CHECK(plus.kinetic_coeff == 0.5);
    CHECK(plus.stiffness == 1.0);
    CHECK(plus.offset == doctest::Approx(p.eps0).epsilon(1e-15));
    CHECK_THROWS_AS(hamiltonian_sigma_x(p, 0), DomainError);

    const ModelParams free = derive_scales(1.0, 0.0);
    CHECK(hamiltonian_sigma_x(free, +1).center == 0.0);
    CHECK(hamiltonian_sigma_x(free, -1).center == 0.0);
}

namespace {

// Reassemble the σ_x-representation Hamiltonian in a truncated Fock basis:
// blocks h^± on the spin diagonal, Δ/2 between the branches, plus ε₀.
Eigen::MatrixXd assemble_sigma_x(const ModelParams& p, int n_fock) {
    const int dim = 2 * n_fock;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int s = 0; s < 2; ++s) {
        const OscillatorForm osc = hamiltonian_sigma_x(p, s == 0 ? +1 : -1);
        const double c = osc.center;
        for (int n = 0; n < n_fock; ++n) {
            // ½p² + ½(x−c)² = a†a + ½ + c²/2 − c·x
            h(s * n_fock + n, s * n_fock + n) = n + 0.5 + c * c / 2.0 + osc.offset;
            if (n + 1 < n_fock) {
                const double x_elem = std::sqrt((n + 1.0) / 2.0);
                h(s * n_fock + n, s * n_fock + n + 1) = -c * x_elem;
                h(s * n_fock + n + 1, s * n_fock + n) = -c * x_elem;
            }
        }
        // Δ/2 couples the two σ_x branches at equal photon number.
        const int other = 1 - s;
        for (int n = 0; n < n_fock; ++n) {
            h(s * n_fock + n, other * n_fock + n) = p.delta / 2.0;
        }
    }
    return h;
}

}  // namespace

TEST_CASE("sigma_x form is unitarily equivalent to the direct Hamiltonian") {
    const ModelParams p = derive_scales(1.0, 1.0);
    const int n_max = 39;  // 40 Fock levels
    const Eigen::MatrixXd hx = assemble_sigma_x(p, n_max + 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hx,
                                                          Eigen::EigenvaluesOnly);
    const std::vector<double> direct = dense_oracle(p, n_max);
    REQUIRE(static_cast<int>(direct.size()) == solver.eigenvalues().size());
    for (int i = 0; i < solver.eigenvalues().size(); ++i) {
        CHECK(std::abs(solver.eigenvalues()[i] - direct[i]) < 1e-10);
    }
}
