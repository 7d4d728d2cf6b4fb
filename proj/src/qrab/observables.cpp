#include "qrab/observables.hpp"

#include <cmath>
#include <numbers>

#include "qrab/errors.hpp"
#include "qrab/wigner.hpp"

namespace qrab {

double mean_photon_m(const VariationalParams& vp) {
    const double a2 = vp.alpha * vp.alpha;
    const double b2 = vp.beta * vp.beta;
    return 0.5 * (a2 * vp.d_alpha * vp.d_alpha + b2 * vp.d_beta * vp.d_beta);
}

double displacement_gap(const VariationalParams& vp) {
    return std::abs(vp.d_alpha - vp.d_beta);
}

SpinProbabilities spin_probabilities(const VariationalParams& vp) {
    const double s = mirror_overlap(vp);
    const double p_up = 0.5 * (1.0 - s);
    return {p_up, 1.0 - p_up};
}

double entanglement_entropy(double p_up, EntropyBase base) {
    if (!(p_up >= 0.0) || p_up > 1.0) {
        throw DomainError("entanglement_entropy: p_up must be in [0, 1]");
    }
    auto plogp = [](double p) { return p > 0.0 ? p * std::log(p) : 0.0; };
    const double nats = -(plogp(p_up) + plogp(1.0 - p_up));
    return base == EntropyBase::Nats ? nats : nats / std::numbers::ln2;
}

std::string_view region_name(Region region) {
    switch (region) {
        case Region::VS: return "VS";
        case Region::SVS: return "SVS";
        case Region::SCS: return "SCS";
        case Region::CSWS: return "CSWS";
    }
    return "?";
}

Classification classify(const ModelParams& model,
                        const GroundStateSolution& solution) {
    const double ratio = model.g / model.g_c;
    Region region = Region::CSWS;
    if (ratio < 0.5) {
        region = Region::VS;
    } else if (ratio < 1.0) {
        region = Region::SVS;
    } else if (ratio < 1.5) {
        region = Region::SCS;
    }
    return {region, ratio, solution.params.xi, mean_photon_m(solution.params)};
}

PhotonStatistics photon_statistics(const GroundStateSolution& solution,
                                   int n_max) {
    if (n_max < 0) throw DomainError("photon_statistics: n_max must be >= 0");
    const FockProjection even =
        fock_amplitudes(trial_state(solution.params, TrialBranch::PsiEven), n_max);
    const FockProjection odd =
        fock_amplitudes(trial_state(solution.params, TrialBranch::PsiOdd), n_max);
    PhotonStatistics stats;
    stats.bins.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        const double ae = even.amplitudes[n] / 2.0;
        const double ao = odd.amplitudes[n] / 2.0;
        stats.bins.push_back({n, ae * ae + ao * ao, n % 2});
    }
    stats.tail_mass = (even.tail_mass + odd.tail_mass) / 4.0;
    stats.truncation_warning = stats.tail_mass > 1e-6;
    return stats;
}

PhotonStatistics photon_statistics(const EDResult& ed) {
    PhotonStatistics stats;
    stats.bins.reserve(ed.vector.size());
    for (std::size_t n = 0; n < ed.vector.size(); ++n) {
        stats.bins.push_back(
            {static_cast<int>(n), ed.vector[n] * ed.vector[n],
             static_cast<int>(n % 2)});
    }
    stats.tail_mass = ed.tail_mass;
    stats.truncation_warning = ed.tail_mass > 1e-6;
    return stats;
}

PhasePoint phase_point(const GroundStateSolution& solution, const EDResult* ed,
                       bool with_negativity) {
    PhasePoint point;
    point.model = solution.model;
    point.g_over_gc =
        solution.model.g_c > 0.0 ? solution.model.g / solution.model.g_c : 0.0;
    point.energy = solution.energy;
    point.energy_error = solution.has_ed ? solution.energy_error : 0.0;
    point.params = solution.params;
    point.m = mean_photon_m(solution.params);
    point.delta_d = displacement_gap(solution.params);
    const SpinProbabilities spin = spin_probabilities(solution.params);
    point.p_up = spin.p_up;
    point.p_down = spin.p_down;
    point.entropy = entanglement_entropy(spin.p_up);
    point.region = classify(solution.model, solution).region;
    if (solution.has_ed) point.ed_energy = solution.ed_energy;
    if (ed != nullptr) {
        const EDObservables obs = ed_observables(*ed, solution.model);
        point.ed_energy = ed->energy;
        point.ed_mean_photon = obs.mean_photon;
        point.ed_p_up = obs.p_up;
        point.ed_entropy = obs.entropy;
    }
    if (with_negativity) {
        const AnalyticWigner terms = analytic_terms(solution.params);
        const PhaseGrid grid = default_grid(solution, 257, 257);
        point.negativity_total =
            negativity_refined(terms, WignerComponent::Total, grid);
        point.negativity_even =
            negativity_refined(terms, WignerComponent::Even, grid);
        point.negativity_odd =
            negativity_refined(terms, WignerComponent::Odd, grid);
    }
    return point;
}

}  // namespace qrab
