// Scalar diagnostics, classification, and parity-resolved photon statistics.

#include "doctest.h"

#include <cmath>
#include <numbers>

#include "qrab/errors.hpp"
#include "qrab/exact_diag.hpp"
#include "qrab/observables.hpp"
#include "qrab/variational.hpp"

using namespace qrab;

TEST_CASE("mean photon estimator") {
    const ModelParams flat = model_from_ratio(10.0, 1.0);
    CHECK(mean_photon_m(make_variational(flat, 0.8, 1.0, 0.0, 0.0)) == 0.0);

    // α = 1, D_α = 2: coherent-state mean photon D²/2 = 2
    const ModelParams coh = derive_scales(1.0, std::sqrt(2.0));  // g′ = 2
    const VariationalParams vp = make_variational(coh, 1.0, 1.0, 1.0, 0.3);
    CHECK(vp.d_alpha == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(mean_photon_m(vp) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("displacement gap") {
    const ModelParams model = model_from_ratio(100.0, 1.6);
    SolveOptions opts;
    opts.compute_ed_error = false;
    const GroundStateSolution eq =
        minimize_ground(model, Ansatz::EqualDisplacement, opts);
    CHECK(displacement_gap(eq.params) == 0.0);
    const VariationalParams vp = make_variational(model, 0.9, 1.0, 0.8, 0.5);
    CHECK(displacement_gap(vp) ==
          doctest::Approx(0.3 * model.g_prime).epsilon(1e-12));
}

TEST_CASE("spin probabilities") {
    const ModelParams model = model_from_ratio(10.0, 1.0);
    // coincident components: separable limit
    const VariationalParams flat = make_variational(model, 0.8, 1.0, 0.0, 0.0);
    const SpinProbabilities sep = spin_probabilities(flat);
    CHECK(sep.p_up == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(sep.p_down == doctest::Approx(1.0).epsilon(1e-14));

    // far-separated polaron: orthogonal branches
    const ModelParams wide = derive_scales(1.0, 30.0);
    const VariationalParams ortho = make_variational(wide, 1.0, 1.0, 1.0, 1.0);
    const SpinProbabilities half = spin_probabilities(ortho);
    CHECK(half.p_up == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(half.p_down == doctest::Approx(0.5).epsilon(1e-12));

    // identity P₊ = ⟨ψ_O|ψ_O⟩/4
    const VariationalParams vp = make_variational(model, 0.9, 0.8, 0.9, 0.6);
    const double from_odd =
        state_norm2(trial_state(vp, TrialBranch::PsiOdd)) / 4.0;
    CHECK(spin_probabilities(vp).p_up == doctest::Approx(from_odd).epsilon(1e-12));
}

TEST_CASE("entanglement entropy") {
    CHECK(entanglement_entropy(0.0) == 0.0);
    CHECK(entanglement_entropy(1.0) == 0.0);
    CHECK(entanglement_entropy(0.5) == doctest::Approx(std::numbers::ln2));
    CHECK(entanglement_entropy(0.5, EntropyBase::Bits) == doctest::Approx(1.0));
    CHECK(entanglement_entropy(0.1, EntropyBase::Bits) ==
          doctest::Approx(entanglement_entropy(0.1) / std::numbers::ln2));
    CHECK_THROWS_AS(entanglement_entropy(-0.1), DomainError);
    CHECK_THROWS_AS(entanglement_entropy(1.1), DomainError);
}

TEST_CASE("classification thresholds") {
    SolveOptions opts;
    opts.compute_ed_error = false;
    auto region_at = [&](double g_over_gc) {
        const ModelParams model = model_from_ratio(100.0, g_over_gc);
        const GroundStateSolution sol = minimize_ground(model, Ansatz::Full4, opts);
        return classify(model, sol);
    };
    CHECK(region_at(0.4).region == Region::VS);
    CHECK(region_at(0.98).region == Region::SVS);
    CHECK(region_at(1.1).region == Region::SCS);
    CHECK(region_at(1.6).region == Region::CSWS);
    // boundary values land rightward
    CHECK(region_at(0.5).region == Region::SVS);
    CHECK(region_at(1.0).region == Region::SCS);
    CHECK(region_at(1.5).region == Region::CSWS);
    CHECK(region_name(Region::CSWS) == "CSWS");
    // annotations carry the measured squeeze
    const Classification c = region_at(1.1);
    CHECK(c.xi > 0.0);
    CHECK(c.xi < 1.0);
}

TEST_CASE("photon statistics of a deep vacuum point") {
    const ModelParams model = model_from_ratio(100.0, 0.2);
    SolveOptions opts;
    opts.compute_ed_error = false;
    const GroundStateSolution sol = minimize_ground(model, Ansatz::Full4, opts);
    const PhotonStatistics stats = photon_statistics(sol, 40);
    CHECK(stats.bins[0].population > 0.999);
    for (std::size_t i = 1; i < stats.bins.size(); ++i) {
        CHECK(stats.bins[i].population < 1e-3);
    }
    double sum = 0.0;
    for (const FockBin& bin : stats.bins) sum += bin.population;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("variational odd-parity mass equals P+ and tracks ED") {
    const ModelParams model = model_from_ratio(100.0, 1.6);
    const GroundStateSolution sol = minimize_ground(model, Ansatz::Full4);
    const PhotonStatistics stats = photon_statistics(sol, 160);
    double odd_mass = 0.0, even_mass = 0.0;
    for (const FockBin& bin : stats.bins) {
        (bin.parity == 1 ? odd_mass : even_mass) += bin.population;
    }
    const SpinProbabilities spins = spin_probabilities(sol.params);
    CHECK(std::abs(odd_mass - spins.p_up) < 1e-8);
    CHECK(std::abs(even_mass - spins.p_down) < 1e-8);

    const EDResult ed = solve_ground(model, 1e-10);
    const EDObservables obs = ed_observables(ed, model);
    CHECK(std::abs(spins.p_up - obs.p_up) < 1e-2);
    CHECK(std::abs(odd_mass - obs.p_up) < 1e-2);

    // ED statistics carry Fock-level parity directly
    const PhotonStatistics ed_stats = photon_statistics(ed);
    double ed_odd = 0.0;
    for (const FockBin& bin : ed_stats.bins) {
        if (bin.parity == 1) ed_odd += bin.population;
    }
    CHECK(ed_odd == doctest::Approx(obs.p_up).epsilon(1e-12));
}

TEST_CASE("phase point assembly is self-consistent") {
    const ModelParams model = model_from_ratio(100.0, 1.2);
    const GroundStateSolution sol = minimize_ground(model, Ansatz::Full4);
    const EDResult ed = solve_ground(model, 1e-10);
    const PhasePoint point = phase_point(sol, &ed, false);
    CHECK(point.energy == sol.energy);
    CHECK(point.energy_error ==
          doctest::Approx(std::abs(sol.energy - ed.energy) / std::abs(ed.energy))
              .epsilon(1e-12));
    CHECK(point.p_up + point.p_down == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(point.entropy >= 0.0);
    CHECK(point.entropy <= std::numbers::ln2 + 1e-12);
    CHECK(point.region == Region::SCS);
    REQUIRE(point.ed_p_up.has_value());
    CHECK(std::abs(*point.ed_p_up - point.p_up) < 1e-2);
}
