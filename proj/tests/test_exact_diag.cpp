// Parity-chain construction and the dense two-level⊗Fock validator.
//
// The chain headed by |↓,0⟩ carries the ground state; its site-n diagonal
// is n − (−1)ⁿ·Δ/2 (the dense oracle below confirms the sign pattern).

#include "doctest.h"

#include <cmath>
#include <random>

#include "qrab/errors.hpp"
#include "qrab/exact_diag.hpp"
#include "qrab/model.hpp"
#include "qrab/tridiag.hpp"

using namespace qrab;

TEST_CASE("chain arrays at delta=1, g=1") {
    const ModelParams p = derive_scales(1.0, 1.0);
    const ParityChain chain = build_parity_chain(p, +1, 2);
    REQUIRE(chain.diag.size() == 3);
    REQUIRE(chain.offdiag.size() == 2);
    // head of the ground chain is |↓,0⟩ at −Δ/2
    CHECK(chain.diag[0] == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(chain.diag[1] == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(chain.diag[2] == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(chain.offdiag[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(chain.offdiag[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("chain diagonal is validated by the dense oracle") {
    // The two parity chains together must reproduce the dense spectrum.
    const ModelParams p = derive_scales(1.0, 1.0);
    const int n_max = 24;
    const std::vector<double> dense = dense_oracle(p, n_max);
    const EDResult even = solve_chain_ground(p, +1, n_max);
    const EDResult odd = solve_chain_ground(p, -1, n_max);
    CHECK(std::abs(even.energy - dense[0]) < 1e-10);
    CHECK(std::abs(odd.energy - dense[1]) < 1e-10);
}

TEST_CASE("odd chain equals the even chain with delta negated") {
    const ModelParams p = derive_scales(3.7, 0.9);
    const ParityChain odd = build_parity_chain(p, -1, 6);
    const ParityChain even = build_parity_chain(p, +1, 6);
    for (int n = 0; n <= 6; ++n) {
        const double mirrored = n + (n % 2 == 0 ? 1.0 : -1.0) * p.delta / 2.0;
        CHECK(odd.diag[n] == doctest::Approx(mirrored).epsilon(1e-15));
        CHECK(odd.diag[n] == doctest::Approx(2.0 * n - even.diag[n]).epsilon(1e-15));
    }
    CHECK(odd.offdiag == even.offdiag);
}

TEST_CASE("zero coupling decouples the chain") {
    const ModelParams p = derive_scales(2.5, 0.0);
    const EDResult r = solve_chain_ground(p, +1, 12);
    CHECK(r.energy == doctest::Approx(-1.25).epsilon(1e-13));
    CHECK(std::abs(r.vector[0]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("delta = 0 is the displaced oscillator") {
    const ModelParams p = derive_scales(0.0, 0.8);
    const EDResult r = solve_ground(p, 1e-12);
    CHECK(r.energy == doctest::Approx(-0.64).epsilon(1e-10));
    const EDObservables obs = ed_observables(r, p);
    CHECK(obs.mean_photon == doctest::Approx(0.64).epsilon(1e-8));
}

TEST_CASE("dense oracle limits") {
    const ModelParams p = derive_scales(3.0, 0.0);
    const std::vector<double> vals = dense_oracle(p, 8);
    // g = 0 spectrum is {n ± Δ/2}
    CHECK(vals[0] == doctest::Approx(-1.5).epsilon(1e-12));
    CHECK(vals[1] == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(vals[2] == doctest::Approx(0.5).epsilon(1e-12));

    const ModelParams q = derive_scales(0.0, 0.5);
    const std::vector<double> deg = dense_oracle(q, 60);
    // Δ = 0 spectrum is {n − g²}, doubly degenerate
    CHECK(deg[0] == doctest::Approx(-0.25).epsilon(1e-9));
    CHECK(deg[1] == doctest::Approx(-0.25).epsilon(1e-9));
    CHECK(deg[2] == doctest::Approx(0.75).epsilon(1e-9));

    CHECK_THROWS_AS(dense_oracle(p, 500), DomainError);
}

TEST_CASE("parity chains vs dense oracle on random parameters") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> ddist(0.1, 50.0);
    std::uniform_real_distribution<double> gdist(0.0, 6.0);
    for (int trial = 0; trial < 10; ++trial) {
        const ModelParams p = derive_scales(ddist(rng), gdist(rng));
        const int n_max = 80;
        const std::vector<double> dense = dense_oracle(p, n_max);
        const EDResult even = solve_chain_ground(p, +1, n_max);
        const EDResult odd = solve_chain_ground(p, -1, n_max);
        CHECK(std::abs(even.energy - dense[0]) < 1e-10);
        CHECK(std::abs(odd.energy - dense[1]) < 1e-10);
        CHECK(even.energy <= odd.energy + 1e-12);
    }
}

TEST_CASE("energy is monotone non-increasing in the truncation") {
    const ModelParams p = derive_scales(8.0, 2.0);
    double prev = solve_chain_ground(p, +1, 16).energy;
    for (int n : {32, 64, 128}) {
        const double e = solve_chain_ground(p, +1, n).energy;
        CHECK(e <= prev + 1e-12);
        prev = e;
    }
}

TEST_CASE("truncation control") {
    // free field: the floor truncation already converges
    const ModelParams free = derive_scales(1.0, 0.0);
    CHECK(converge_truncation(free, 1e-10) == 20);
    CHECK_THROWS_AS(converge_truncation(free, -1.0), DomainError);

    // deep coupling: truncation stays proportional to g′²
    const ModelParams deep = model_from_ratio(1000.0, 3.0);
    const double gp2 = deep.g_prime * deep.g_prime;
    const int n = converge_truncation(deep, 1e-10);
    CHECK(n >= gp2);
    CHECK(n <= 16.0 * gp2 + 100.0);
    const EDResult r = solve_ground(deep, 1e-10);
    CHECK(r.tail_mass < 1e-8);
}

TEST_CASE("observable sums and limits") {
    const ModelParams p = model_from_ratio(10.0, 1.4);
    const EDResult r = solve_ground(p, 1e-10);
    const EDObservables obs = ed_observables(r, p);
    CHECK(obs.p_up + obs.p_down == doctest::Approx(1.0).epsilon(1e-12));
    double fock_sum = 0.0;
    for (double v : obs.fock_even) fock_sum += v;
    for (double v : obs.fock_odd) fock_sum += v;
    CHECK(fock_sum == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(obs.entropy >= 0.0);
    CHECK(obs.entropy <= std::log(2.0) + 1e-12);

    const ModelParams free = derive_scales(4.0, 0.0);
    const EDObservables free_obs =
        ed_observables(solve_ground(free, 1e-10), free);
    CHECK(free_obs.mean_photon == doctest::Approx(0.0));
    CHECK(free_obs.p_up == doctest::Approx(0.0));
    CHECK(free_obs.entropy == doctest::Approx(0.0));
}
