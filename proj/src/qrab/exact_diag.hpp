// exact_diag.hpp — numerically exact ground state of the quantum Rabi model.
//
// The Hamiltonian conserves the joint spin/photon parity, so each parity
// sector is a chain |↓,0⟩ ↔ |↑,1⟩ ↔ |↓,2⟩ ↔ … closed under H, and the
// sector Hamiltonian is symmetric tridiagonal. The ground state lives in
// the chain headed by |↓,0⟩ (parity +1 here). A dense two-level⊗Fock
// diagonalization validates the chain construction independently.

#pragma once

#include <vector>

#include "qrab/model.hpp"

namespace qrab {

struct ParityChain {
    int parity = +1;  // +1: chain headed by |↓,0⟩; -1: headed by |↑,0⟩
    int n_max = 0;
    std::vector<double> diag;     // n_max+1 entries: n - parity·(-1)ⁿ·Δ/2
    std::vector<double> offdiag;  // n_max entries: g·√(n+1)
};

ParityChain build_parity_chain(const ModelParams& params, int parity, int n_max);

struct EDResult {
    double energy = 0.0;
    std::vector<double> vector;  // unit norm over chain sites
    int parity = +1;
    int n_max = 0;
    double tail_mass = 0.0;  // population of the top 5% of sites
};

// Ground eigenpair of one parity chain at fixed truncation.
EDResult solve_chain_ground(const ModelParams& params, int parity, int n_max,
                            double tol = 1e-12);

// Smallest truncation for which one more doubling changes the ground energy
// by less than energy_tol and the tail mass stays below 1e-8.
int converge_truncation(const ModelParams& params, double energy_tol);

// Converged even-sector ground state (truncation chosen automatically).
EDResult solve_ground(const ModelParams& params, double energy_tol = 1e-10);

struct EDObservables {
    double mean_photon = 0.0;
    double p_up = 0.0;
    double p_down = 0.0;
    double entropy = 0.0;               // von Neumann entropy of the spin, nats
    std::vector<double> fock_even;      // populations at n = 0, 2, 4, ...
    std::vector<double> fock_odd;       // populations at n = 1, 3, 5, ...
};

// Chain-site spin alternation: on the parity=+1 chain even n ↔ |↓⟩_z.
EDObservables ed_observables(const EDResult& result, const ModelParams& params);

// Full spectrum of the dense two-level⊗Fock matrix (validator; dense scale
// only, n_max ≤ 200). Eigenvalues ascending.
std::vector<double> dense_oracle(const ModelParams& params, int n_max);

}  // namespace qrab
