// observables.hpp — scalar diagnostics and the nonclassical-state
// classification of the ground state.

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qrab/exact_diag.hpp"
#include "qrab/variational.hpp"

namespace qrab {

// Displacement estimator of the mean photon number:
// m = (α²D_α² + β²D_β²)/2.
double mean_photon_m(const VariationalParams& vp);

// δD = |D_α − D_β|.
double displacement_gap(const VariationalParams& vp);

struct SpinProbabilities {
    double p_up;    // P₊ = (1 − ⟨ψ₊|ψ₋⟩)/2 = ⟨ψ_O|ψ_O⟩/4
    double p_down;  // P₋ = 1 − P₊
};

SpinProbabilities spin_probabilities(const VariationalParams& vp);

enum class EntropyBase { Nats, Bits };

// Binary von Neumann entropy of the spin, with 0·log 0 = 0.
double entanglement_entropy(double p_up, EntropyBase base = EntropyBase::Nats);

// Coupling-strength regions: vacuum, squeezed vacuum, squeezed cat, and
// cat without squeezing.
enum class Region { VS, SVS, SCS, CSWS };

std::string_view region_name(Region region);

struct Classification {
    Region region;
    double g_over_gc;     // the classifying variable
    double xi;            // measured squeeze, annotation only
    double mean_photon;   // measured m, annotation only
};

// Heuristic thresholds on g/g_c at 0.5 / 1.0 / 1.5.
Classification classify(const ModelParams& model,
                        const GroundStateSolution& solution);

struct FockBin {
    int n;
    double population;
    int parity;  // n mod 2
};

struct PhotonStatistics {
    std::vector<FockBin> bins;
    bool truncation_warning = false;
    double tail_mass = 0.0;
};

// Parity-resolved Fock populations of the variational ground state: the
// even/odd cat branches carry weight ¼ each in the σ_z decomposition.
PhotonStatistics photon_statistics(const GroundStateSolution& solution, int n_max);

// Same for an exact-diagonalization result (chain site n is Fock level n).
PhotonStatistics photon_statistics(const EDResult& ed);

// One fully analyzed sweep point.
struct PhasePoint {
    ModelParams model{};
    double g_over_gc = 0.0;
    double energy = 0.0;
    double energy_error = 0.0;
    VariationalParams params{};
    double m = 0.0;
    double delta_d = 0.0;
    double p_up = 0.0;
    double p_down = 0.0;
    double entropy = 0.0;
    Region region = Region::VS;
    std::optional<double> ed_energy;
    std::optional<double> ed_mean_photon;
    std::optional<double> ed_p_up;
    std::optional<double> ed_entropy;
    std::optional<double> negativity_total;
    std::optional<double> negativity_even;
    std::optional<double> negativity_odd;
};

PhasePoint phase_point(const GroundStateSolution& solution,
                       const EDResult* ed = nullptr,
                       bool with_negativity = false);

}  // namespace qrab
