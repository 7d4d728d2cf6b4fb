// Quadrature rules and Hermite-function evaluation.

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "qrab/quadrature.hpp"

using namespace qrab;

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
    const QuadRule rule = gauss_legendre(8);
    for (int k = 0; k <= 15; ++k) {
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            sum += rule.weights[i] * std::pow(rule.nodes[i], k);
        }
        const double exact = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
        CHECK(std::abs(sum - exact) < 1e-13);
    }
}

TEST_CASE("composite Gauss-Legendre on a smooth integrand") {
    const QuadRule rule = gauss_legendre(12);
    const double val = integrate_composite([](double x) { return std::cos(x); },
                                           0.0, 2.0, 8, rule);
    CHECK(val == doctest::Approx(std::sin(2.0)).epsilon(1e-13));
}

TEST_CASE("Gauss-Hermite with modified weights integrates Gaussians") {
    const QuadRule rule = gauss_hermite(48);
    double plain = 0.0, displaced = 0.0, moment2 = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = rule.nodes[i];
        plain += rule.weights[i] * std::exp(-x * x);
        displaced += rule.weights[i] * std::exp(-(x - 3.0) * (x - 3.0));
        moment2 += rule.weights[i] * x * x * std::exp(-x * x);
    }
    const double root_pi = std::sqrt(std::numbers::pi);
    CHECK(plain == doctest::Approx(root_pi).epsilon(1e-12));
    CHECK(displaced == doctest::Approx(root_pi).epsilon(1e-10));
    CHECK(moment2 == doctest::Approx(root_pi / 2.0).epsilon(1e-12));
}

TEST_CASE("Hermite function values and parity") {
    std::vector<double> h(5);
    hermite_functions(0.0, h);
    const double pref = std::pow(std::numbers::pi, -0.25);
    CHECK(h[0] == doctest::Approx(pref).epsilon(1e-14));
    CHECK(h[1] == doctest::Approx(0.0));
    CHECK(h[2] == doctest::Approx(-pref / std::sqrt(2.0)).epsilon(1e-13));
    CHECK(h[3] == doctest::Approx(0.0));

    hermite_functions(1.3, h);
    std::vector<double> hm(5);
    hermite_functions(-1.3, hm);
    for (int n = 0; n < 5; ++n) {
        CHECK(h[n] == doctest::Approx((n % 2 ? -1.0 : 1.0) * hm[n]).epsilon(1e-13));
    }
}

TEST_CASE("Hermite functions stay finite far outside the classical region") {
    std::vector<double> h(201);
    hermite_functions(50.0, h);
    for (double v : h) {
        CHECK(std::isfinite(v));
        CHECK(std::abs(v) < 1.0);
    }
    // turning point of n=200 is near sqrt(401) ≈ 20 << 50
    CHECK(std::abs(h[200]) < 1e-100);
}

TEST_CASE("Hermite functions are orthonormal under Gauss-Hermite") {
    const int n_quad = 400;
    const QuadRule rule = gauss_hermite(n_quad);
    std::vector<double> h(151);
    std::vector<std::vector<double>> table(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        hermite_functions(rule.nodes[i], h);
        table[i] = h;
    }
    const std::vector<std::pair<int, int>> pairs = {
        {0, 0}, {1, 1}, {7, 7}, {150, 150}, {0, 2}, {3, 5}, {149, 150}, {10, 140}};
    for (const auto& [m, n] : pairs) {
        double dot = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            dot += rule.weights[i] * table[i][m] * table[i][n];
        }
        CHECK(std::abs(dot - (m == n ? 1.0 : 0.0)) < 1e-11);
    }
}
