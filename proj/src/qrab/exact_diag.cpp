#include "qrab/exact_diag.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "qrab/errors.hpp"
#include "qrab/tridiag.hpp"

namespace qrab {

namespace {

constexpr int kTruncationCap = 200000;
constexpr double kTailThreshold = 1e-8;

double tail_mass_of(const std::vector<double>& v) {
    const int n = static_cast<int>(v.size());
    const int tail = std::max(1, n / 20);
    double mass = 0.0;
    for (int i = n - tail; i < n; ++i) mass += v[i] * v[i];
    return mass;
}

SymmetricTridiagonal as_tridiagonal(const ParityChain& chain) {
    return SymmetricTridiagonal{chain.diag, chain.offdiag};
}

}  // namespace

ParityChain build_parity_chain(const ModelParams& params, int parity, int n_max) {
    if (parity != 1 && parity != -1) {
        throw DomainError("build_parity_chain: parity must be +1 or -1");
    }
    if (n_max < 1) throw DomainError("build_parity_chain: n_max must be >= 1");
    ParityChain chain;
    chain.parity = parity;
    chain.n_max = n_max;
    chain.diag.resize(n_max + 1);
    chain.offdiag.resize(n_max);
    for (int n = 0; n <= n_max; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        chain.diag[n] = n - parity * sign * params.delta / 2.0;
    }
    for (int n = 0; n < n_max; ++n) {
        chain.offdiag[n] = params.g * std::sqrt(n + 1.0);
    }
    return chain;
}

EDResult solve_chain_ground(const ModelParams& params, int parity, int n_max,
                            double tol) {
    const ParityChain chain = build_parity_chain(params, parity, n_max);
    const GroundPair pair = ground_eigenpair(as_tridiagonal(chain), tol);
    EDResult result;
    result.energy = pair.value;
    result.vector = pair.vector;
    result.parity = parity;
    result.n_max = n_max;
    result.tail_mass = tail_mass_of(pair.vector);
    return result;
}

namespace {

EDResult solve_ground_impl(const ModelParams& params, double energy_tol) {
    if (!(energy_tol > 0.0)) {
        throw DomainError("converge_truncation: energy_tol must be positive");
    }
    const double gp2 = params.g_prime * params.g_prime;
    int n = static_cast<int>(std::ceil(4.0 * gp2 + 20.0));
    EDResult cur = solve_chain_ground(params, +1, n);
    while (true) {
        if (2 * n > kTruncationCap) {
            throw ResourceError("converge_truncation: truncation cap exceeded");
        }
        EDResult next = solve_chain_ground(params, +1, 2 * n);
        if (std::abs(next.energy - cur.energy) < energy_tol &&
            cur.tail_mass < kTailThreshold) {
            return cur;
        }
        cur = std::move(next);
        n *= 2;
    }
}

}  // namespace

int converge_truncation(const ModelParams& params, double energy_tol) {
    return solve_ground_impl(params, energy_tol).n_max;
}

EDResult solve_ground(const ModelParams& params, double energy_tol) {
    return solve_ground_impl(params, energy_tol);
}

EDObservables ed_observables(const EDResult& result, const ModelParams& params) {
    (void)params;
    EDObservables obs;
    const int n = static_cast<int>(result.vector.size());
    for (int i = 0; i < n; ++i) {
        const double pop = result.vector[i] * result.vector[i];
        obs.mean_photon += i * pop;
        const bool up = (result.parity == +1) ? (i % 2 == 1) : (i % 2 == 0);
        if (up) {
            obs.p_up += pop;
        } else {
            obs.p_down += pop;
        }
        if (i % 2 == 0) {
            obs.fock_even.push_back(pop);
        } else {
            obs.fock_odd.push_back(pop);
        }
    }
    auto plogp = [](double p) { return p > 0.0 ? p * std::log(p) : 0.0; };
    obs.entropy = -(plogp(obs.p_up) + plogp(obs.p_down));
    return obs;
}

std::vector<double> dense_oracle(const ModelParams& params, int n_max) {
    if (n_max < 1) throw DomainError("dense_oracle: n_max must be >= 1");
    if (n_max > 200) throw DomainError("dense_oracle: dense scale capped at 200");
    const int fock = n_max + 1;
    const int dim = 2 * fock;
    // Basis |s, n⟩ with s = 0 (↓), 1 (↑); index s·fock + n.
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int s = 0; s < 2; ++s) {
        const double spin = (s == 1) ? 0.5 : -0.5;
        for (int n = 0; n < fock; ++n) {
            h(s * fock + n, s * fock + n) = n + spin * params.delta;
        }
    }
    for (int s = 0; s < 2; ++s) {
        const int flip = 1 - s;
        for (int n = 0; n + 1 < fock; ++n) {
            const double c = params.g * std::sqrt(n + 1.0);
            h(flip * fock + n + 1, s * fock + n) += c;
            h(s * fock + n, flip * fock + n + 1) += c;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h,
                                                          Eigen::EigenvaluesOnly);
    std::vector<double> values(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + dim);
    std::sort(values.begin(), values.end());
    return values;
}

}  // namespace qrab
