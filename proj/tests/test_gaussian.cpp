// Gaussian matrix elements against the quadrature oracle, plus the Fock
// projection. The closed forms are never trusted on their own: every one
// is validated here against direct numerical integration.

#include "doctest.h"

#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "qrab/errors.hpp"
#include "qrab/gaussian.hpp"

using namespace qrab;

namespace {

GaussianState single(double center, double xi) {
    return GaussianState{xi, {{1.0, center}}};
}

}  // namespace

TEST_CASE("overlap closed form") {
    CHECK(overlap(1.7, 1.7, 0.8) == 1.0);
    CHECK(overlap(0.0, 2.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(overlap(0.3, -1.2, 0.7) == overlap(-1.2, 0.3, 0.7));
    CHECK_THROWS_AS(overlap(0.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(overlap(0.0, 1.0, -2.0), DomainError);
}

TEST_CASE("overlap equals the quadrature of the Gaussian product") {
    // product of two unit-normalized Gaussians at 0 and 2 with ξ = 1
    GaussianState pair{1.0, {{1.0, 0.0}, {1.0, 2.0}}};
    const double norm2 = quadrature_expectation(pair, QuadKernel::overlap());
    // ⟨ψ|ψ⟩ = 2 + 2·overlap
    CHECK(norm2 == doctest::Approx(2.0 + 2.0 * std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("overlap is a positive-definite kernel") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> center(-10.0, 10.0);
    std::uniform_real_distribution<double> squeeze(0.05, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double xi = squeeze(rng);
        Eigen::Matrix4d gram;
        double c[4];
        for (double& ci : c) ci = center(rng);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) gram(i, j) = overlap(c[i], c[j], xi);
        }
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(gram);
        CHECK(solver.eigenvalues()[0] > -1e-12);
    }
}

TEST_CASE("h_matrix_element trivial values") {
    CHECK(h_matrix_element(0.0, 0.0, 1.0, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    for (double c : {-3.0, 0.4, 7.7}) {
        CHECK(h_matrix_element(c, c, 1.0, c) == doctest::Approx(0.5).epsilon(1e-14));
    }
    CHECK(h_matrix_element(0.7, -0.3, 0.4, -1.2) ==
          h_matrix_element(-0.3, 0.7, 0.4, -1.2));
    CHECK_THROWS_AS(h_matrix_element(0.0, 0.0, -1.0, 0.0), DomainError);
}

namespace {

// Cross matrix element ⟨φ_{c1}|K|φ_{c2}⟩ via the polarization identity on
// the quadrature oracle (independent of the closed form under test).
double cross_by_quadrature(double c1, double c2, double xi, double well) {
    auto h_of = [&](const GaussianState& s) {
        return quadrature_expectation(s, QuadKernel::kinetic()) +
               quadrature_expectation(s, QuadKernel::potential(well));
    };
    GaussianState sum{xi, {{1.0, c1}, {1.0, c2}}};
    const double total = h_of(sum);
    const double d1 = h_of(single(c1, xi));
    const double d2 = h_of(single(c2, xi));
    return (total - d1 - d2) / 2.0;
}

}  // namespace

TEST_CASE("h_matrix_element equals Gauss quadrature at a fixed point") {
    const double closed = h_matrix_element(0.7, -0.3, 0.4, -1.2);
    const double quad = cross_by_quadrature(0.7, -0.3, 0.4, -1.2);
    CHECK(std::abs(closed - quad) < 1e-10);
    CHECK(closed == doctest::Approx(1.5246510493905918).epsilon(1e-12));
}

TEST_CASE("closed forms equal the quadrature oracle on a random domain") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> center(-10.0, 10.0);
    std::uniform_real_distribution<double> squeeze(0.05, 3.0);
    std::uniform_real_distribution<double> wells(-10.0, 10.0);
    for (int trial = 0; trial < 30; ++trial) {
        const double c1 = center(rng), c2 = center(rng);
        const double xi = squeeze(rng), well = wells(rng);
        const double closed = h_matrix_element(c1, c2, xi, well);
        const double quad = cross_by_quadrature(c1, c2, xi, well);
        CHECK(std::abs(closed - quad) <= 1e-10 * std::max(1.0, std::abs(closed)));

        const double ov = overlap(c1, c2, xi);
        GaussianState pair{xi, {{1.0, c1}, {1.0, c2}}};
        const double norm2 = quadrature_expectation(pair, QuadKernel::overlap());
        CHECK(std::abs(norm2 - (2.0 + 2.0 * ov)) <= 1e-10 * std::max(1.0, norm2));
    }
}

TEST_CASE("quadrature kernels: trivial anchors") {
    CHECK(quadrature_expectation(single(0.0, 1.0), QuadKernel::overlap()) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // ⟨p²⟩/2 of a squeezed vacuum is ξ/4
    CHECK(quadrature_expectation(single(0.0, 0.5), QuadKernel::kinetic()) ==
          doctest::Approx(0.125).epsilon(1e-12));
    // first moment of a displaced Gaussian is its center
    CHECK(quadrature_expectation(single(1.7, 0.9), QuadKernel::x_moment(1)) ==
          doctest::Approx(1.7).epsilon(1e-12));
}

TEST_CASE("parity-flip quadrature equals the mirror-overlap expansion") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> wdist(0.2, 1.0);
    std::uniform_real_distribution<double> cdist(-3.0, 3.0);
    std::uniform_real_distribution<double> xdist(0.2, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        GaussianState s{xdist(rng),
                        {{wdist(rng), cdist(rng)}, {wdist(rng), cdist(rng)}}};
        const double quad = quadrature_expectation(s, QuadKernel::parity_flip());
        CHECK(std::abs(quad - mirror_overlap(s)) < 1e-10);
    }
}

TEST_CASE("fock amplitudes: vacuum and squeezed vacuum") {
    const FockProjection vac = fock_amplitudes(single(0.0, 1.0), 12);
    CHECK(vac.amplitudes[0] == doctest::Approx(1.0).epsilon(1e-12));
    for (int n = 1; n <= 12; ++n) CHECK(std::abs(vac.amplitudes[n]) < 1e-12);
    CHECK_FALSE(vac.truncation_warning);

    const FockProjection squeezed = fock_amplitudes(single(0.0, 0.4), 40);
    for (int n = 1; n <= 39; n += 2) CHECK(std::abs(squeezed.amplitudes[n]) < 1e-12);
    CHECK(std::abs(squeezed.amplitudes[2]) > 1e-3);
}

TEST_CASE("coherent-like component has Poissonian populations") {
    const double d = 2.0;
    const FockProjection proj = fock_amplitudes(single(d, 1.0), 40);
    const double mean = d * d / 2.0;
    for (int n = 0; n <= 20; ++n) {
        double log_poisson = -mean + n * std::log(mean) - std::lgamma(n + 1.0);
        const double pop = proj.amplitudes[n] * proj.amplitudes[n];
        CHECK(std::abs(pop - std::exp(log_poisson)) < 1e-10);
    }
}

TEST_CASE("Parseval mass is monotone in n_max and warnings fire") {
    GaussianState cat{0.7, {{0.6, 2.5}, {0.5, -2.5}}};
    const double norm2 = state_norm2(cat);
    double prev = 0.0;
    for (int n_max : {4, 8, 16, 32, 64}) {
        const FockProjection proj = fock_amplitudes(cat, n_max);
        double sum = 0.0;
        for (double a : proj.amplitudes) sum += a * a;
        CHECK(sum >= prev - 1e-14);
        CHECK(sum <= norm2 + 1e-10);
        prev = sum;
    }
    CHECK(fock_amplitudes(cat, 2).truncation_warning);
    CHECK(fock_amplitudes(cat, 2).tail_mass > 1e-6);
    CHECK_FALSE(fock_amplitudes(cat, 64).truncation_warning);
    const FockProjection full = fock_amplitudes(cat, 64);
    double sum = 0.0;
    for (double a : full.amplitudes) sum += a * a;
    CHECK(sum == doctest::Approx(norm2).epsilon(1e-10));
}

TEST_CASE("invalid states are rejected") {
    CHECK_THROWS_AS(state_norm2(GaussianState{0.0, {{1.0, 0.0}}}), DomainError);
    CHECK_THROWS_AS(state_norm2(GaussianState{1.0, {}}), DomainError);
    CHECK_THROWS_AS(fock_amplitudes(single(0.0, 1.0), -1), DomainError);
}
