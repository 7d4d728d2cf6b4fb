#include "qrab/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qrab/errors.hpp"
#include "qrab/quadrature.hpp"

namespace qrab {

namespace {

// Cross-Wigner terms of a real Gaussian superposition, scaled by `weight`.
std::vector<WignerTerm> state_terms(const GaussianState& state, double weight) {
    std::vector<WignerTerm> terms;
    const auto& cs = state.components;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = i; j < cs.size(); ++j) {
            const double pair_factor = (i == j) ? 1.0 : 2.0;
            terms.push_back({weight * pair_factor * cs[i].weight * cs[j].weight /
                                 std::numbers::pi,
                             0.5 * (cs[i].center + cs[j].center),
                             cs[i].center - cs[j].center});
        }
    }
    return terms;
}

void append_scaled(std::vector<WignerTerm>& dst, const std::vector<WignerTerm>& src,
                   double factor) {
    for (const auto& t : src) {
        dst.push_back({factor * t.amplitude, t.x_center, t.p_frequency});
    }
}

}  // namespace

double AnalyticWigner::eval(WignerComponent c, double x, double p) const {
    const double pp = p * p / squeeze;
    double sum = 0.0;
    for (const auto& t : components[static_cast<int>(c)]) {
        const double dx = x - t.x_center;
        sum += t.amplitude * std::cos(t.p_frequency * p) *
               std::exp(-squeeze * dx * dx - pp);
    }
    return sum;
}

AnalyticWigner analytic_terms(const VariationalParams& vp) {
    AnalyticWigner w;
    w.squeeze = vp.xi;
    const double a = vp.alpha, b = vp.beta, da = vp.d_alpha, db = vp.d_beta;
    const double inv_pi = 1.0 / std::numbers::pi;

    auto& comp = w.components;
    comp[static_cast<int>(WignerComponent::PlusX)] =
        state_terms(trial_state(vp, TrialBranch::PsiPlus), 0.5);
    comp[static_cast<int>(WignerComponent::MinusX)] =
        state_terms(trial_state(vp, TrialBranch::PsiMinus), 0.5);

    auto& total = comp[static_cast<int>(WignerComponent::Total)];
    append_scaled(total, comp[static_cast<int>(WignerComponent::PlusX)], 1.0);
    append_scaled(total, comp[static_cast<int>(WignerComponent::MinusX)], 1.0);

    // Interference between ψ₊ and its mirror: ½·Re W[ψ₊, ψ₋].
    auto& cross = comp[static_cast<int>(WignerComponent::CrossD)];
    cross = {
        {a * a * inv_pi / 2.0, 0.0, 2.0 * da},
        {b * b * inv_pi / 2.0, 0.0, 2.0 * db},
        {a * b * inv_pi / 2.0, 0.5 * (da + db), da - db},
        {a * b * inv_pi / 2.0, -0.5 * (da + db), da - db},
    };

    auto& even = comp[static_cast<int>(WignerComponent::Even)];
    append_scaled(even, total, 0.5);
    append_scaled(even, cross, 1.0);
    auto& odd = comp[static_cast<int>(WignerComponent::Odd)];
    append_scaled(odd, total, 0.5);
    append_scaled(odd, cross, -1.0);

    // Semi-cats: one Gaussian lobe plus the interference ridge of W±x.
    comp[static_cast<int>(WignerComponent::Alive)] = {
        {0.5 * a * a * inv_pi, da, 0.0},
        {a * b * inv_pi, 0.5 * (da - db), da + db},
    };
    comp[static_cast<int>(WignerComponent::Dead)] = {
        {0.5 * a * a * inv_pi, -da, 0.0},
        {a * b * inv_pi, -0.5 * (da - db), da + db},
    };
    return w;
}

namespace {

double fringe_spacing_limit(const VariationalParams& vp) {
    const double dsum = vp.d_alpha + vp.d_beta;
    if (!(dsum > 0.0)) return std::numeric_limits<double>::infinity();
    return std::numbers::pi / (8.0 * dsum);
}

void validate_grid(const GroundStateSolution& solution, const PhaseGrid& grid) {
    const VariationalParams& vp = solution.params;
    if (grid.nx < 64 || grid.np < 64) {
        throw ConfigError("PhaseGrid: nx and np must be at least 64");
    }
    if (!(grid.x_min < grid.x_max) || !(grid.p_min < grid.p_max)) {
        throw ConfigError("PhaseGrid: empty extent");
    }
    const double dmax = std::max(std::abs(vp.d_alpha), std::abs(vp.d_beta));
    const double x_need = dmax + 5.0 / std::sqrt(vp.xi);
    const double p_need = 5.0 * std::max(1.0, std::sqrt(vp.xi));
    if (grid.x_min > -x_need || grid.x_max < x_need) {
        throw ConfigError("PhaseGrid: x extent does not cover the state support");
    }
    if (grid.p_min > -p_need || grid.p_max < p_need) {
        throw ConfigError("PhaseGrid: p extent does not cover the state support");
    }
    const double dp = (grid.p_max - grid.p_min) / (grid.np - 1);
    if (dp > fringe_spacing_limit(vp)) {
        throw ConfigError("PhaseGrid: p spacing too coarse for the fringes");
    }
}

}  // namespace

PhaseGrid default_grid(const GroundStateSolution& solution, int nx, int np) {
    const VariationalParams& vp = solution.params;
    const double dmax = std::max(std::abs(vp.d_alpha), std::abs(vp.d_beta));
    const double xw = dmax + 6.0 / std::sqrt(vp.xi);
    const double pw = 6.0 * std::max(1.0, std::sqrt(vp.xi));
    PhaseGrid grid;
    grid.x_min = -xw;
    grid.x_max = xw;
    grid.p_min = -pw;
    grid.p_max = pw;
    grid.nx = std::max(nx, 64);
    grid.np = std::max(np, 64);
    const double limit = fringe_spacing_limit(vp);
    if (std::isfinite(limit)) {
        const int need = static_cast<int>(std::ceil(2.0 * pw / limit)) + 1;
        grid.np = std::max(grid.np, need);
    }
    return grid;
}

WignerField analytic_field(const GroundStateSolution& solution,
                           const PhaseGrid& grid) {
    validate_grid(solution, grid);
    const AnalyticWigner terms = analytic_terms(solution.params);
    WignerField field;
    field.grid = grid;
    field.squeeze = terms.squeeze;
    for (int c = 0; c < kWignerComponents; ++c) {
        auto& out = field.data[c];
        out.resize(static_cast<std::size_t>(grid.nx) * grid.np);
        for (int j = 0; j < grid.np; ++j) {
            const double p = grid.p(j);
            for (int i = 0; i < grid.nx; ++i) {
                out[static_cast<std::size_t>(j) * grid.nx + i] =
                    terms.eval(static_cast<WignerComponent>(c), grid.x(i), p);
            }
        }
    }
    return field;
}

std::vector<double> numeric_field(const GaussianState& state,
                                  const PhaseGrid& grid, double tol) {
    double support = 0.0;
    for (const auto& c : state.components) {
        support = std::max(support, std::abs(c.center));
    }
    support += 8.0 / std::sqrt(std::min(state.squeeze, 1.0));
    const double p_abs = std::max(std::abs(grid.p_min), std::abs(grid.p_max));

    const QuadRule rule = gauss_legendre(12);
    const double osc = std::numbers::pi / (4.0 * std::max(p_abs, 0.5));
    const int base_panels = std::max(
        16, static_cast<int>(std::ceil(
                2.0 * support / std::min(osc, 0.8 / std::sqrt(state.squeeze)))));

    std::vector<double> out(static_cast<std::size_t>(grid.nx) * grid.np);
    for (int j = 0; j < grid.np; ++j) {
        const double p = grid.p(j);
        // W is even in p for real states; mirror the finished row.
        const int jm = grid.np - 1 - j;
        if (grid.p(jm) == -p && jm < j) {
            for (int i = 0; i < grid.nx; ++i) {
                out[static_cast<std::size_t>(j) * grid.nx + i] =
                    out[static_cast<std::size_t>(jm) * grid.nx + i];
            }
            continue;
        }
        for (int i = 0; i < grid.nx; ++i) {
            const double x = grid.x(i);
            auto integrand = [&](double xp) {
                return eval_state(state, x - xp) * eval_state(state, x + xp) *
                       std::cos(2.0 * xp * p);
            };
            int panels = base_panels;
            double value =
                integrate_composite(integrand, -support, support, panels, rule);
            bool ok = false;
            for (int r = 0; r < 6; ++r) {
                panels *= 2;
                const double refined =
                    integrate_composite(integrand, -support, support, panels, rule);
                const double change = std::abs(refined - value);
                value = refined;
                if (change < tol * std::max(1.0, std::abs(refined))) {
                    ok = true;
                    break;
                }
            }
            if (!ok) {
                throw NumericError("numeric_field: quadrature did not converge");
            }
            out[static_cast<std::size_t>(j) * grid.nx + i] =
                value / std::numbers::pi;
        }
    }
    return out;
}

namespace {

// Composite Simpson weights for n points (n >= 3); odd interval counts are
// closed with a 3/8 rule on the last three intervals.
std::vector<double> simpson_weights(int n, double h) {
    std::vector<double> w(n, 0.0);
    const int intervals = n - 1;
    int simpson_end = intervals;  // Simpson covers intervals [0, simpson_end)
    if (intervals % 2 != 0) {
        simpson_end = intervals - 3;
        const double c = 3.0 * h / 8.0;
        w[n - 4] += c;
        w[n - 3] += 3.0 * c;
        w[n - 2] += 3.0 * c;
        w[n - 1] += c;
    }
    for (int i = 0; i + 2 <= simpson_end; i += 2) {
        w[i] += h / 3.0;
        w[i + 1] += 4.0 * h / 3.0;
        w[i + 2] += h / 3.0;
    }
    return w;
}

}  // namespace

double negativity(std::span<const double> field, const PhaseGrid& grid) {
    if (static_cast<std::size_t>(grid.nx) * grid.np != field.size()) {
        throw ConfigError("negativity: field size does not match grid");
    }
    if (grid.nx < 3 || grid.np < 3) {
        throw ConfigError("negativity: grid too small for Simpson");
    }
    const double hx = (grid.x_max - grid.x_min) / (grid.nx - 1);
    const double hp = (grid.p_max - grid.p_min) / (grid.np - 1);
    const std::vector<double> wx = simpson_weights(grid.nx, hx);
    const std::vector<double> wp = simpson_weights(grid.np, hp);
    double sum = 0.0;
    for (int j = 0; j < grid.np; ++j) {
        double row = 0.0;
        for (int i = 0; i < grid.nx; ++i) {
            const double v = field[static_cast<std::size_t>(j) * grid.nx + i];
            row += wx[i] * (std::abs(v) - v);
        }
        sum += wp[j] * row;
    }
    return sum;
}

double negativity_refined(const AnalyticWigner& terms, WignerComponent component,
                          const PhaseGrid& start, double tol) {
    PhaseGrid grid = start;
    // Odd point counts keep plain Simpson panels throughout refinement.
    grid.nx = std::max(grid.nx, 257) | 1;
    grid.np = std::max(grid.np, 257) | 1;

    auto sample = [&](const PhaseGrid& g) {
        std::vector<double> f(static_cast<std::size_t>(g.nx) * g.np);
        for (int j = 0; j < g.np; ++j) {
            const double p = g.p(j);
            for (int i = 0; i < g.nx; ++i) {
                f[static_cast<std::size_t>(j) * g.nx + i] =
                    terms.eval(component, g.x(i), p);
            }
        }
        return f;
    };

    std::vector<double> f = sample(grid);
    double boundary = 0.0;
    for (int i = 0; i < grid.nx; ++i) {
        boundary = std::max(boundary, std::abs(f[i]));
        boundary = std::max(
            boundary,
            std::abs(f[static_cast<std::size_t>(grid.np - 1) * grid.nx + i]));
    }
    for (int j = 0; j < grid.np; ++j) {
        boundary =
            std::max(boundary, std::abs(f[static_cast<std::size_t>(j) * grid.nx]));
        boundary = std::max(
            boundary,
            std::abs(f[static_cast<std::size_t>(j) * grid.nx + grid.nx - 1]));
    }
    if (boundary > 1e-10) {
        std::ostringstream msg;
        msg << "negativity_refined: component support reaches the grid boundary "
               "(|W| = "
            << boundary << "); widen the grid";
        throw ConfigError(msg.str());
    }

    double value = negativity(f, grid);
    for (int r = 0; r < 4; ++r) {
        PhaseGrid finer = grid;
        finer.nx = 2 * (grid.nx - 1) + 1;
        finer.np = 2 * (grid.np - 1) + 1;
        const std::vector<double> ff = sample(finer);
        const double refined = negativity(ff, finer);
        const double change = std::abs(refined - value);
        grid = finer;
        value = refined;
        if (change < tol) return value;
    }
    throw NumericError("negativity_refined: no convergence under grid doubling");
}

}  // namespace qrab
