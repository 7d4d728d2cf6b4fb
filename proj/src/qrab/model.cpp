#include "qrab/model.hpp"

#include <cmath>

#include "qrab/errors.hpp"

namespace qrab {

ModelParams derive_scales(double delta, double g) {
    if (!(delta >= 0.0)) {
        throw DomainError("derive_scales: delta must be non-negative");
    }
    if (!(g >= 0.0)) {
        throw DomainError("derive_scales: coupling g must be non-negative");
    }
    ModelParams p{};
    p.delta = delta;
    p.g = g;
    p.ratio = delta;
    p.g_prime = std::sqrt(2.0) * g;
    p.g_c0 = std::sqrt(delta) / 2.0;
    const double gc04 = p.g_c0 * p.g_c0 * p.g_c0 * p.g_c0;
    p.g_c = std::sqrt(1.0 + std::sqrt(1.0 + gc04));
    p.eps0 = -(p.g_prime * p.g_prime + 1.0) / 2.0;
    return p;
}

ModelParams model_from_ratio(double ratio, double g_over_gc) {
    if (!(g_over_gc >= 0.0)) {
        throw DomainError("model_from_ratio: g/g_c must be non-negative");
    }
    const ModelParams scales = derive_scales(ratio, 0.0);
    return derive_scales(ratio, g_over_gc * scales.g_c);
}

OscillatorForm hamiltonian_sigma_x(const ModelParams& params, int sigma_x) {
    if (sigma_x != 1 && sigma_x != -1) {
        throw DomainError("hamiltonian_sigma_x: branch must be +1 or -1");
    }
    return OscillatorForm{0.5, -static_cast<double>(sigma_x) * params.g_prime, 1.0,
                          params.eps0};
}

}  // namespace qrab
