// wigner.hpp — phase-space analysis of the polaron ground state.
//
// Every analytic component is a sum of terms
//     A · cos(ω·p) · exp[-ξ(x - x₀)² - p²/ξ]
// coming from the pairwise cross-Wigner transforms of displaced Gaussians:
// for components at c₁, c₂ the (symmetrized) transform is centered at
// (c₁+c₂)/2 with fringe frequency ω = c₁ - c₂. The ψ₊/ψ₋ spin branches
// each carry weight ½, so ∬W_total = 1; the σ_z even/odd cat fields are
// W_total/2 ± W_cross with ∬W_even = P₋ and ∬W_odd = P₊. A direct
// quadrature of the Wigner transform serves as the oracle for all of it.

#pragma once

#include <array>
#include <span>
#include <vector>

#include "qrab/gaussian.hpp"
#include "qrab/variational.hpp"

namespace qrab {

struct PhaseGrid {
    double x_min = -6.0, x_max = 6.0;
    double p_min = -6.0, p_max = 6.0;
    int nx = 512, np = 512;

    // Endpoint-exact linear interpolation; symmetric grids mirror exactly.
    double x(int i) const {
        return (x_min * (nx - 1 - i) + x_max * i) / (nx - 1);
    }
    double p(int j) const {
        return (p_min * (np - 1 - j) + p_max * j) / (np - 1);
    }
};

enum class WignerComponent : int {
    PlusX = 0,   // ½·W[ψ₊]
    MinusX = 1,  // ½·W[ψ₋]
    Total = 2,   // W⁺x + W⁻x
    Even = 3,    // W_T/2 + W_D
    Odd = 4,     // W_T/2 − W_D
    CrossD = 5,  // interference between ψ₊ and ψ₋
    Alive = 6,   // polaron lobe of W⁺x plus its interference ridge
    Dead = 7,    // mirror semi-cat
};
inline constexpr int kWignerComponents = 8;

struct WignerTerm {
    double amplitude;
    double x_center;
    double p_frequency;
};

struct AnalyticWigner {
    double squeeze = 1.0;
    std::array<std::vector<WignerTerm>, kWignerComponents> components;

    double eval(WignerComponent c, double x, double p) const;
};

AnalyticWigner analytic_terms(const VariationalParams& vp);

struct WignerField {
    PhaseGrid grid;
    double squeeze = 1.0;
    // Row-major in p-then-x: data[c][j*nx + i] = W_c(x_i, p_j).
    std::array<std::vector<double>, kWignerComponents> data;

    std::span<const double> component(WignerComponent c) const {
        return data[static_cast<int>(c)];
    }
};

// Grid for a solved state: x spans the displacements plus 6/√ξ, p spans
// 6·max(1,√ξ), and the p spacing resolves the interference fringes.
PhaseGrid default_grid(const GroundStateSolution& solution, int nx = 512,
                       int np = 512);

// Sample every component on the grid; throws ConfigError if the grid
// violates the coverage or fringe-resolution requirements.
WignerField analytic_field(const GroundStateSolution& solution,
                           const PhaseGrid& grid);

// Oracle: W(x,p) = (1/π)∫dx' ψ(x−x')ψ(x+x') cos(2x'p) by adaptive
// composite quadrature, refined until |change| < tol per node.
std::vector<double> numeric_field(const GaussianState& state,
                                  const PhaseGrid& grid, double tol = 1e-9);

// δ = ∬(|W| − W) dx dp by composite Simpson on the sampled field.
double negativity(std::span<const double> field, const PhaseGrid& grid);

// Same integral evaluated from the analytic terms with grid-doubling
// refinement until the change is below tol; checks boundary support.
double negativity_refined(const AnalyticWigner& terms, WignerComponent component,
                          const PhaseGrid& start, double tol = 1e-4);

}  // namespace qrab
