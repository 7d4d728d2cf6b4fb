// quadrature.hpp — Gauss–Legendre / Gauss–Hermite rules and stable
// Hermite-function evaluation.

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qrab {

struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// n-point Gauss–Legendre rule on [-1, 1].
QuadRule gauss_legendre(int n);

// n-point Gauss–Hermite rule with *modified* weights w_i·e^{x_i²}, so that
//   ∫ f(x) dx ≈ Σ_i weights[i]·f(nodes[i])
// for integrands that decay at least as fast as a Gaussian. Nodes are the
// roots of the n-th Hermite function (Golub–Welsch eigenvalues of the
// Jacobi matrix, polished by Newton steps on the stable recursion).
QuadRule gauss_hermite(int n);

// Evaluate the orthonormal harmonic-oscillator eigenfunctions
//   h_n(x) = H_n(x) e^{-x²/2} / sqrt(2^n n! sqrt(π)),  n = 0..out.size()-1,
// by the normalized three-term recursion with overflow-safe rescaling.
void hermite_functions(double x, std::span<double> out);

// Composite quadrature of f over [a, b]: `panels` equal panels, each
// integrated with the supplied reference rule on [-1, 1].
double integrate_composite(const std::function<double(double)>& f, double a,
                           double b, int panels, const QuadRule& rule);

}  // namespace qrab
