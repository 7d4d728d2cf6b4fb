// model.hpp — quantum Rabi model parameters and derived coupling scales.
//
// Units: ħω = 1 throughout; every energy is a multiple of the oscillator
// quantum. The model Hamiltonian is
//
//     H = a†a + (Δ/2)σ_z + g σ_x (a† + a),
//
// and in the σ_x representation each spin branch is a displaced unit
// oscillator, h^σ = ½[p² + (x − c_σ)²] with c_σ = −σ g′ and a common
// offset ε₀ = −(g′² + 1)/2, where g′ = √2·g.

#pragma once

namespace qrab {

struct ModelParams {
    double delta;    // two-level splitting Δ
    double g;        // coupling strength
    double ratio;    // R = Δ/ħω (= Δ in these units)
    double g_prime;  // √2·g
    double g_c0;     // bare critical scale √Δ/2
    double g_c;      // squeezing-corrected critical scale √(1 + √(1 + g_c0⁴))
    double eps0;     // −(g′² + 1)/2
};

// Populate all derived scales from (Δ, g). Requires Δ ≥ 0 and g ≥ 0.
ModelParams derive_scales(double delta, double g);

// Convenience entry point matching how sweeps are parameterized:
// the ratio R fixes Δ, and the coupling is given relative to g_c.
ModelParams model_from_ratio(double ratio, double g_over_gc);

// One spin branch of the σ_x-representation Hamiltonian:
// h = kinetic_coeff·p² + ½·stiffness·(x − center)², plus the shared
// offset (applied once when the two branches are reassembled).
struct OscillatorForm {
    double kinetic_coeff;  // ½
    double center;         // −σ_x·g′
    double stiffness;      // 1
    double offset;         // ε₀
};

// sigma_x = +1 or −1 selects the branch.
OscillatorForm hamiltonian_sigma_x(const ModelParams& params, int sigma_x);

}  // namespace qrab
