#include "qrab/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "qrab/errors.hpp"
#include "qrab/quadrature.hpp"

namespace qrab {

namespace {

void validate(const GaussianState& state) {
    if (!(state.squeeze > 0.0)) {
        throw DomainError("GaussianState: squeeze must be positive");
    }
    if (state.components.empty()) {
        throw DomainError("GaussianState: at least one component required");
    }
}

double component_prefactor(double xi) {
    return std::pow(xi / std::numbers::pi, 0.25);
}

}  // namespace

double overlap(double c1, double c2, double xi) {
    if (!(xi > 0.0)) throw DomainError("overlap: squeeze must be positive");
    const double d = c1 - c2;
    return std::exp(-xi * d * d / 4.0);
}

double h_matrix_element(double c1, double c2, double xi, double well_center) {
    if (!(xi > 0.0)) {
        throw DomainError("h_matrix_element: squeeze must be positive");
    }
    const double s = overlap(c1, c2, xi);
    const double d = c1 - c2;
    const double m = 0.5 * (c1 + c2);
    const double kinetic = xi / 2.0 - xi * xi * d * d / 4.0;
    const double potential = (m - well_center) * (m - well_center) + 1.0 / (2.0 * xi);
    return 0.5 * s * (kinetic + potential);
}

double state_norm2(const GaussianState& state) {
    validate(state);
    double sum = 0.0;
    for (const auto& a : state.components) {
        for (const auto& b : state.components) {
            sum += a.weight * b.weight * overlap(a.center, b.center, state.squeeze);
        }
    }
    return sum;
}

double mirror_overlap(const GaussianState& state) {
    validate(state);
    double sum = 0.0;
    for (const auto& a : state.components) {
        for (const auto& b : state.components) {
            sum += a.weight * b.weight * overlap(a.center, -b.center, state.squeeze);
        }
    }
    return sum;
}

double eval_state(const GaussianState& state, double x) {
    const double pref = component_prefactor(state.squeeze);
    double sum = 0.0;
    for (const auto& c : state.components) {
        const double d = x - c.center;
        sum += c.weight * pref * std::exp(-state.squeeze * d * d / 2.0);
    }
    return sum;
}

double eval_state_derivative(const GaussianState& state, double x) {
    const double pref = component_prefactor(state.squeeze);
    double sum = 0.0;
    for (const auto& c : state.components) {
        const double d = x - c.center;
        sum += c.weight * pref * (-state.squeeze * d) *
               std::exp(-state.squeeze * d * d / 2.0);
    }
    return sum;
}

double quadrature_expectation(const GaussianState& state, const QuadKernel& kernel,
                              const QuadratureSpec& spec) {
    validate(state);
    const double xi = state.squeeze;
    auto [min_it, max_it] = std::minmax_element(
        state.components.begin(), state.components.end(),
        [](const GaussianComponent& a, const GaussianComponent& b) {
            return a.center < b.center;
        });
    double lo = min_it->center - spec.pad / std::sqrt(xi);
    double hi = max_it->center + spec.pad / std::sqrt(xi);
    if (kernel.type == QuadKernel::Type::ParityFlip) {
        // ψ(x)ψ(-x) needs the mirrored supports as well.
        const double m = std::max(std::abs(lo), std::abs(hi));
        lo = -m;
        hi = m;
    }

    auto integrand = [&](double x) -> double {
        switch (kernel.type) {
            case QuadKernel::Type::Overlap: {
                const double v = eval_state(state, x);
                return v * v;
            }
            case QuadKernel::Type::Kinetic: {
                // ⟨p²⟩/2 = ½∫ψ'² by parts.
                const double dv = eval_state_derivative(state, x);
                return 0.5 * dv * dv;
            }
            case QuadKernel::Type::Potential: {
                const double v = eval_state(state, x);
                const double r = x - kernel.well_center;
                return 0.5 * r * r * v * v;
            }
            case QuadKernel::Type::XMoment: {
                const double v = eval_state(state, x);
                return std::pow(x, kernel.moment) * v * v;
            }
            case QuadKernel::Type::ParityFlip:
                return eval_state(state, x) * eval_state(state, -x);
        }
        return 0.0;
    };

    const QuadRule rule = gauss_legendre(16);
    const int rule_n = static_cast<int>(rule.nodes.size());
    // Panels sized to resolve the Gaussian scale 1/√ξ, and at least enough
    // for the requested minimum node count.
    int panels = std::max((spec.min_nodes + rule_n - 1) / rule_n,
                          static_cast<int>(std::ceil((hi - lo) * std::sqrt(xi) / 1.5)));
    double value = integrate_composite(integrand, lo, hi, panels, rule);
    for (int r = 0; r < spec.max_refinements; ++r) {
        panels *= 2;
        const double refined = integrate_composite(integrand, lo, hi, panels, rule);
        const double change = std::abs(refined - value);
        value = refined;
        if (change < spec.tol * std::max(1.0, std::abs(refined))) return value;
    }
    std::ostringstream msg;
    msg << "quadrature_expectation: no convergence after " << spec.max_refinements
        << " refinements (" << panels * rule_n << " nodes, last value " << value
        << ")";
    throw NumericError(msg.str());
}

namespace {

const QuadRule& cached_hermite_rule(int n) {
    static std::mutex mutex;
    static std::map<int, QuadRule> cache;
    std::scoped_lock lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, gauss_hermite(n)).first;
    return it->second;
}

}  // namespace

FockProjection fock_amplitudes(const GaussianState& state, int n_max) {
    validate(state);
    if (n_max < 0) throw DomainError("fock_amplitudes: n_max must be >= 0");
    const double xi = state.squeeze;
    double span = 0.0;
    for (const auto& c : state.components) span = std::max(span, std::abs(c.center));
    span += 8.0 / std::sqrt(std::min(xi, 1.0));
    // Gauss–Hermite nodes reach ≈ ±√(2N); cover the state support and keep
    // at least polynomial exactness through 2(n_max+1).
    const int nodes = std::max(2 * (n_max + 1),
                               static_cast<int>(std::ceil(0.6 * span * span)) + 32);
    const QuadRule& rule = cached_hermite_rule(nodes);

    FockProjection out;
    out.amplitudes.assign(n_max + 1, 0.0);
    std::vector<double> h(n_max + 1);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = rule.nodes[i];
        const double psi = eval_state(state, x);
        if (psi == 0.0) continue;
        hermite_functions(x, h);
        const double wpsi = rule.weights[i] * psi;
        for (int n = 0; n <= n_max; ++n) out.amplitudes[n] += wpsi * h[n];
    }

    double captured = 0.0;
    for (double a : out.amplitudes) captured += a * a;
    out.tail_mass = std::max(0.0, state_norm2(state) - captured);
    out.truncation_warning = out.tail_mass > 1e-6;
    return out;
}

}  // namespace qrab
