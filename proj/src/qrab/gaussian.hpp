// gaussian.hpp — closed-form matrix elements between displaced, equally
// squeezed Gaussians, a numerical-quadrature oracle for every closed form,
// and projection onto the Fock basis.
//
// A component is the unit-normalized wavepacket
//     φ_c(x) = (ξ/π)^{1/4} exp[-ξ(x-c)²/2],
// and a state is a weighted sum of components sharing one squeeze ξ.
// Closed forms used throughout (m = (c₁+c₂)/2):
//     ⟨φ_{c₁}|φ_{c₂}⟩            = exp[-ξ(c₁-c₂)²/4]
//     ⟨φ_{c₁}| p² |φ_{c₂}⟩       = S·[ξ/2 - ξ²(c₁-c₂)²/4]
//     ⟨φ_{c₁}|(x-w)²|φ_{c₂}⟩     = S·[(m-w)² + 1/(2ξ)]

#pragma once

#include <span>
#include <vector>

namespace qrab {

struct GaussianComponent {
    double weight;
    double center;
};

struct GaussianState {
    double squeeze = 1.0;  // ξ > 0, shared by all components
    std::vector<GaussianComponent> components;
};

// ⟨φ_{c1}|φ_{c2}⟩ for squeeze xi.
double overlap(double c1, double c2, double xi);

// ⟨φ_{c1}| ½[p² + (x - well_center)²] |φ_{c2}⟩.
double h_matrix_element(double c1, double c2, double xi, double well_center);

// ⟨ψ|ψ⟩ from pairwise overlaps.
double state_norm2(const GaussianState& state);

// ⟨ψ(x)|ψ(-x)⟩ from pairwise overlaps against the mirrored component set.
double mirror_overlap(const GaussianState& state);

double eval_state(const GaussianState& state, double x);
double eval_state_derivative(const GaussianState& state, double x);

// --- quadrature oracle -----------------------------------------------------

struct QuadKernel {
    enum class Type { Overlap, Kinetic, Potential, XMoment, ParityFlip };
    Type type = Type::Overlap;
    double well_center = 0.0;  // Potential only
    int moment = 1;            // XMoment only

    static QuadKernel overlap() { return {Type::Overlap, 0.0, 0}; }
    static QuadKernel kinetic() { return {Type::Kinetic, 0.0, 0}; }
    static QuadKernel potential(double well) { return {Type::Potential, well, 0}; }
    static QuadKernel x_moment(int k) { return {Type::XMoment, 0.0, k}; }
    static QuadKernel parity_flip() { return {Type::ParityFlip, 0.0, 0}; }
};

struct QuadratureSpec {
    int min_nodes = 400;      // initial composite node count
    double pad = 8.0;         // domain is [min c - pad/√ξ, max c + pad/√ξ]
    int max_refinements = 10; // node-doubling cap
    double tol = 1e-12;       // |change| < tol·max(1, |I|) stops refinement
};

// Composite Gauss–Legendre evaluation of ⟨ψ|K|ψ⟩, refined by node doubling;
// throws NumericError when the cap is reached without convergence.
double quadrature_expectation(const GaussianState& state, const QuadKernel& kernel,
                              const QuadratureSpec& spec = {});

// --- Fock projection --------------------------------------------------------

struct FockProjection {
    std::vector<double> amplitudes;  // a_n = ⟨n|ψ⟩, n = 0..n_max
    double tail_mass = 0.0;          // ⟨ψ|ψ⟩ - Σ a_n²
    bool truncation_warning = false; // tail_mass > 1e-6
};

// Amplitudes via Gauss–Hermite quadrature with the stable Hermite-function
// recursion.
FockProjection fock_amplitudes(const GaussianState& state, int n_max);

}  // namespace qrab
