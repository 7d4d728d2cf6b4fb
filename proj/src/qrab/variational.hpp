// variational.hpp — polaron picture for the quantum Rabi ground state.
//
// Trial wavefunction in the σ_x representation:
//     Ψ = (1/√2)(ψ₊|↑⟩_x − ψ₋|↓⟩_x),   ψ₋(x) = ψ₊(−x),
//     ψ₊(x) = α φ_ξ(x − D_α) + β φ_ξ(x + D_β),
// a polaron of weight α displaced to +D_α plus an antipolaron of weight β
// at −D_β, sharing one squeeze ξ. Normalization fixes β, leaving the four
// free parameters {α, ξ, ζ_α, ζ_β} with D_i = ζ_i·g′. The variational
// energy uses the branch convention in which ψ₊ sees the oscillator well
// at +g′ (displacements come out non-negative in the superradiant phase):
//     E = ⟨ψ₊|½[p² + (x−g′)²]|ψ₊⟩ − (Δ/2)⟨ψ₊|ψ₋⟩ + ε₀.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qrab/gaussian.hpp"
#include "qrab/model.hpp"

namespace qrab {

enum class Ansatz {
    Full4,              // {α, ξ, ζ_α, ζ_β}
    EqualDisplacement,  // {α, ξ, ζ} with ζ_α = ζ_β (large-R reduction)
    SinglePolaron,      // {ζ_α} with α = 1, ξ = 1 (strong-coupling, small R)
};

struct VariationalParams {
    double alpha = 1.0;
    double beta = 0.0;  // from the normalization constraint
    double xi = 1.0;
    double zeta_alpha = 0.0;
    double zeta_beta = 0.0;
    double d_alpha = 0.0;  // ζ_α·g′
    double d_beta = 0.0;   // ζ_β·g′
    double gamma = 0.0;    // √(αβ)
};

// The root of α² + β² + 2αβt = 1 continuous with β = 0 at α = 1.
double beta_from_normalization(double alpha, double t);

// Assemble a full parameter set from the free parameters; β, D's, γ derived.
VariationalParams make_variational(const ModelParams& model, double alpha,
                                   double xi, double zeta_alpha, double zeta_beta);

enum class TrialBranch {
    PsiPlus,      // α at +D_α, β at −D_β
    PsiMinus,     // mirror image
    PsiEven,      // ψ₊ + ψ₋ (even photon numbers only)
    PsiOdd,       // ψ₊ − ψ₋ (odd photon numbers only)
    Polaron,      // φ at +D_α
    Antipolaron,  // φ at −D_β
};

GaussianState trial_state(const VariationalParams& vp, TrialBranch branch);

// ⟨ψ₊|ψ₋⟩.
double mirror_overlap(const VariationalParams& vp);

// Variational energy from the closed-form matrix elements.
double energy(const VariationalParams& vp, const ModelParams& model);

struct SolveOptions {
    double f_tol = 1e-10;
    double x_tol = 1e-8;
    int max_evals = 60000;
    int restarts = 2;
    bool compute_ed_error = true;
    double ed_tol = 1e-10;
    // Warm start (α, ξ, ζ_α, ζ_β), e.g. the neighboring sweep point.
    std::optional<std::array<double, 4>> warm_start;
};

struct StartRecord {
    std::string label;
    double energy = 0.0;
    int evaluations = 0;
};

struct OptimizerTrace {
    std::vector<StartRecord> starts;
    std::string best_start;
    int evaluations = 0;
    double simplex_diameter = 0.0;
    bool stagnation_warning = false;
};

struct GroundStateSolution {
    ModelParams model{};
    Ansatz ansatz = Ansatz::Full4;
    VariationalParams params{};
    double energy = 0.0;
    OptimizerTrace trace{};
    bool has_ed = false;
    double ed_energy = 0.0;
    double energy_error = 0.0;  // |E − E_ed| / |E_ed|
};

// Multi-start Nelder–Mead minimization over transformed coordinates
// (α via a smooth (0,1] map, ln ξ, unconstrained ζ's).
GroundStateSolution minimize_ground(const ModelParams& model, Ansatz ansatz,
                                    const SolveOptions& options = {});

// Converged ξ along a coupling grid, continuation-seeded in both sweep
// directions with the lower-energy result kept per point.
std::vector<std::pair<double, double>> squeezing_profile(
    double ratio, std::span<const double> g_over_gc, Ansatz ansatz = Ansatz::Full4);

}  // namespace qrab
