#include "qrab/quadrature.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>

#include "qrab/errors.hpp"
#include "qrab/tridiag.hpp"

namespace qrab {

QuadRule gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: need at least one node");
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton iteration on P_n from the Chebyshev-like initial guess.
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 64; ++it) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = rule.weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    return rule;
}

void hermite_functions(double x, std::span<double> out) {
    if (out.empty()) return;
    // h_0 = π^{-1/4} e^{-x²/2} can underflow for large |x|; carry the
    // magnitude as mantissa·2^E and rescale as the recursion climbs.
    const double log2_h0 = -x * x / (2.0 * std::numbers::ln2);
    int exponent = static_cast<int>(std::floor(log2_h0));
    double prev = 0.0;
    double cur = std::pow(std::numbers::pi, -0.25) * std::exp2(log2_h0 - exponent);
    out[0] = std::ldexp(cur, exponent);
    for (std::size_t n = 1; n < out.size(); ++n) {
        const double next =
            std::sqrt(2.0 / n) * x * cur - std::sqrt((n - 1.0) / n) * prev;
        prev = cur;
        cur = next;
        const double mag = std::max(std::abs(prev), std::abs(cur));
        if (mag > 1e250) {
            prev = std::ldexp(prev, -1000);
            cur = std::ldexp(cur, -1000);
            exponent += 1000;
        } else if (mag > 0.0 && mag < 1e-250) {
            prev = std::ldexp(prev, 1000);
            cur = std::ldexp(cur, 1000);
            exponent -= 1000;
        }
        out[n] = std::ldexp(cur, exponent);
    }
}

QuadRule gauss_hermite(int n) {
    if (n < 1) throw DomainError("gauss_hermite: need at least one node");
    // Nodes are the eigenvalues of the Jacobi matrix (diag 0, off √(j/2)).
    SymmetricTridiagonal jacobi;
    jacobi.diag.assign(n, 0.0);
    jacobi.offdiag.resize(n - 1);
    for (int j = 1; j < n; ++j) jacobi.offdiag[j - 1] = std::sqrt(j / 2.0);
    std::vector<double> nodes = all_eigenvalues(jacobi, 1e-13);

    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    std::vector<double> h(n + 1);
    for (int i = 0; i < n; ++i) {
        double z = nodes[i];
        // Newton polish on the Hermite function; h_n' = √(2n)h_{n-1} - x h_n.
        for (int it = 0; it < 8; ++it) {
            hermite_functions(z, h);
            const double deriv = std::sqrt(2.0 * n) * h[n - 1] - z * h[n];
            if (deriv == 0.0) break;
            const double dz = h[n] / deriv;
            z -= dz;
            if (std::abs(dz) < 1e-15 * (1.0 + std::abs(z))) break;
        }
        hermite_functions(z, h);
        rule.nodes[i] = z;
        // Modified weight w·e^{x²} = 1 / (n·h_{n-1}(x)²).
        rule.weights[i] = 1.0 / (n * h[n - 1] * h[n - 1]);
    }
    return rule;
}

double integrate_composite(const std::function<double(double)>& f, double a,
                           double b, int panels, const QuadRule& rule) {
    if (panels < 1) throw DomainError("integrate_composite: panels must be >= 1");
    const double width = (b - a) / panels;
    double sum = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double lo = a + k * width;
        const double mid = lo + width / 2.0;
        double panel = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            panel += rule.weights[i] * f(mid + rule.nodes[i] * width / 2.0);
        }
        sum += panel * width / 2.0;
    }
    return sum;
}

}  // namespace qrab
