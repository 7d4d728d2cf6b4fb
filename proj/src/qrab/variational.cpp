#include "qrab/variational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qrab/errors.hpp"
#include "qrab/exact_diag.hpp"
#include "qrab/nelder_mead.hpp"

namespace qrab {

double beta_from_normalization(double alpha, double t) {
    if (!(alpha > 0.0) || alpha > 1.0) {
        throw DomainError("beta_from_normalization: alpha must be in (0, 1]");
    }
    if (!(t >= 0.0) || t > 1.0) {
        // t = 0 is reachable when the component overlap underflows.
        throw DomainError("beta_from_normalization: overlap must be in [0, 1]");
    }
    const double disc = std::max(0.0, alpha * alpha * t * t - alpha * alpha + 1.0);
    return -alpha * t + std::sqrt(disc);
}

VariationalParams make_variational(const ModelParams& model, double alpha,
                                   double xi, double zeta_alpha,
                                   double zeta_beta) {
    if (!(xi > 0.0)) throw DomainError("make_variational: xi must be positive");
    VariationalParams vp;
    vp.alpha = alpha;
    vp.xi = xi;
    vp.zeta_alpha = zeta_alpha;
    vp.zeta_beta = zeta_beta;
    vp.d_alpha = zeta_alpha * model.g_prime;
    vp.d_beta = zeta_beta * model.g_prime;
    const double t = overlap(vp.d_alpha, -vp.d_beta, xi);
    vp.beta = beta_from_normalization(alpha, t);
    vp.gamma = std::sqrt(std::max(0.0, vp.alpha * vp.beta));
    return vp;
}

GaussianState trial_state(const VariationalParams& vp, TrialBranch branch) {
    GaussianState s;
    s.squeeze = vp.xi;
    switch (branch) {
        case TrialBranch::PsiPlus:
            s.components = {{vp.alpha, vp.d_alpha}, {vp.beta, -vp.d_beta}};
            break;
        case TrialBranch::PsiMinus:
            s.components = {{vp.alpha, -vp.d_alpha}, {vp.beta, vp.d_beta}};
            break;
        case TrialBranch::PsiEven:
            s.components = {{vp.alpha, vp.d_alpha},
                            {vp.beta, -vp.d_beta},
                            {vp.alpha, -vp.d_alpha},
                            {vp.beta, vp.d_beta}};
            break;
        case TrialBranch::PsiOdd:
            s.components = {{vp.alpha, vp.d_alpha},
                            {vp.beta, -vp.d_beta},
                            {-vp.alpha, -vp.d_alpha},
                            {-vp.beta, vp.d_beta}};
            break;
        case TrialBranch::Polaron:
            s.components = {{1.0, vp.d_alpha}};
            break;
        case TrialBranch::Antipolaron:
            s.components = {{1.0, -vp.d_beta}};
            break;
    }
    return s;
}

double mirror_overlap(const VariationalParams& vp) {
    return qrab::mirror_overlap(trial_state(vp, TrialBranch::PsiPlus));
}

double energy(const VariationalParams& vp, const ModelParams& model) {
    const double well = hamiltonian_sigma_x(model, -1).center;  // +g′
    const GaussianState psi = trial_state(vp, TrialBranch::PsiPlus);
    double h = 0.0;
    for (const auto& a : psi.components) {
        for (const auto& b : psi.components) {
            h += a.weight * b.weight *
                 h_matrix_element(a.center, b.center, vp.xi, well);
        }
    }
    return h - model.delta / 2.0 * mirror_overlap(vp) + model.eps0;
}

namespace {

int ansatz_dim(Ansatz ansatz) {
    switch (ansatz) {
        case Ansatz::Full4: return 4;
        case Ansatz::EqualDisplacement: return 3;
        case Ansatz::SinglePolaron: return 1;
    }
    return 4;
}

// Transformed coordinates: α = 1/(1+u²) maps ℝ onto (0, 1]; ξ = exp(v).
double alpha_of(double u) { return 1.0 / (1.0 + u * u); }
double u_of_alpha(double alpha) {
    return std::sqrt(std::max(0.0, 1.0 / std::clamp(alpha, 1e-12, 1.0) - 1.0));
}

VariationalParams unpack(const ModelParams& model, Ansatz ansatz,
                         std::span<const double> theta) {
    switch (ansatz) {
        case Ansatz::Full4:
            return make_variational(model, alpha_of(theta[0]), std::exp(theta[1]),
                                    theta[2], theta[3]);
        case Ansatz::EqualDisplacement:
            return make_variational(model, alpha_of(theta[0]), std::exp(theta[1]),
                                    theta[2], theta[2]);
        case Ansatz::SinglePolaron:
            return make_variational(model, 1.0, 1.0, theta[0], theta[0]);
    }
    throw DomainError("unpack: unknown ansatz");
}

std::vector<double> pack(Ansatz ansatz, double alpha, double xi, double za,
                         double zb) {
    switch (ansatz) {
        case Ansatz::Full4:
            return {u_of_alpha(alpha), std::log(xi), za, zb};
        case Ansatz::EqualDisplacement:
            return {u_of_alpha(alpha), std::log(xi), 0.5 * (za + zb)};
        case Ansatz::SinglePolaron:
            return {0.5 * (za + zb)};
    }
    throw DomainError("pack: unknown ansatz");
}

// Polaron/antipolaron relabeling symmetry: (α, β, ζ_α, ζ_β) and
// (β, α, −ζ_β, −ζ_α) describe the same ψ₊. Report the representative with
// the dominant weight in the polaron slot.
VariationalParams canonicalize(const ModelParams& model,
                               const VariationalParams& vp) {
    if (vp.beta <= vp.alpha) return vp;
    return make_variational(model, vp.beta, vp.xi, -vp.zeta_beta, -vp.zeta_alpha);
}

}  // namespace

GroundStateSolution minimize_ground(const ModelParams& model, Ansatz ansatz,
                                    const SolveOptions& options) {
    const int dim = ansatz_dim(ansatz);

    auto objective = [&](std::span<const double> theta) -> double {
        try {
            const double e = energy(unpack(model, ansatz, theta), model);
            return std::isfinite(e) ? e : std::numeric_limits<double>::max();
        } catch (const std::exception&) {
            return std::numeric_limits<double>::max();
        }
    };

    // Seeds: normal phase, the mean-field superradiant displacement, a deep
    // strong-coupling guess, and optionally a warm start from a neighbor.
    const double gr = model.g > 0.0 ? model.g_c / model.g : 0.0;
    const double zeta_sr =
        model.g > 0.0 ? std::sqrt(std::max(0.0, 1.0 - gr * gr * gr * gr)) : 0.0;
    struct Seed {
        std::string label;
        std::vector<double> theta;
        double step;
    };
    std::vector<Seed> seeds;
    if (options.warm_start) {
        const auto& w = *options.warm_start;
        seeds.push_back({"warm", pack(ansatz, w[0], w[1], w[2], w[3]), 0.05});
    }
    seeds.push_back({"normal", pack(ansatz, 0.9, 1.0, 0.0, 0.0), 0.25});
    seeds.push_back({"superradiant", pack(ansatz, 0.995, 1.0, zeta_sr, zeta_sr), 0.2});
    seeds.push_back({"deep", pack(ansatz, 0.998, 0.9, 1.0, 1.0), 0.15});

    NelderMeadOptions nm;
    nm.f_tol = options.f_tol;
    nm.x_tol = options.x_tol;
    nm.max_evals = options.max_evals;
    nm.restarts = options.restarts;

    GroundStateSolution sol;
    sol.model = model;
    sol.ansatz = ansatz;
    double best_f = std::numeric_limits<double>::max();
    std::vector<double> best_theta;
    for (const auto& seed : seeds) {
        std::vector<double> steps(dim, seed.step);
        const NelderMeadResult r = nelder_mead(objective, seed.theta, steps, nm);
        sol.trace.starts.push_back({seed.label, r.f, r.evaluations});
        sol.trace.evaluations += r.evaluations;
        if (r.f < best_f) {
            best_f = r.f;
            best_theta = r.x;
            sol.trace.best_start = seed.label;
            sol.trace.simplex_diameter = r.simplex_diameter;
            sol.trace.stagnation_warning = r.stagnation;
        }
    }

    sol.params = canonicalize(model, unpack(model, ansatz, best_theta));
    sol.energy = energy(sol.params, model);

    if (options.compute_ed_error) {
        const EDResult ed = solve_ground(model, options.ed_tol);
        sol.has_ed = true;
        sol.ed_energy = ed.energy;
        const double denom = std::abs(ed.energy);
        sol.energy_error = denom > 1e-300
                               ? std::abs(sol.energy - ed.energy) / denom
                               : std::abs(sol.energy - ed.energy);
    }
    return sol;
}

std::vector<std::pair<double, double>> squeezing_profile(
    double ratio, std::span<const double> g_over_gc, Ansatz ansatz) {
    for (std::size_t i = 1; i < g_over_gc.size(); ++i) {
        if (!(g_over_gc[i] > g_over_gc[i - 1])) {
            throw DomainError("squeezing_profile: grid must be increasing");
        }
    }
    const std::size_t n = g_over_gc.size();
    std::vector<GroundStateSolution> fwd(n), bwd(n);

    auto sweep = [&](bool forward, std::vector<GroundStateSolution>& out) {
        SolveOptions opts;
        opts.compute_ed_error = false;
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t i = forward ? k : n - 1 - k;
            const ModelParams model = model_from_ratio(ratio, g_over_gc[i]);
            out[i] = minimize_ground(model, ansatz, opts);
            const VariationalParams& p = out[i].params;
            opts.warm_start = {{p.alpha, p.xi, p.zeta_alpha, p.zeta_beta}};
        }
    };
    sweep(true, fwd);
    sweep(false, bwd);

    std::vector<std::pair<double, double>> profile(n);
    for (std::size_t i = 0; i < n; ++i) {
        const GroundStateSolution& best =
            (bwd[i].energy < fwd[i].energy) ? bwd[i] : fwd[i];
        profile[i] = {g_over_gc[i], best.params.xi};
    }
    return profile;
}

}  // namespace qrab
