// nelder_mead.hpp — derivative-free simplex minimizer with restarts.

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qrab {

struct NelderMeadOptions {
    double f_tol = 1e-10;        // absolute spread of simplex values
    double x_tol = 1e-8;         // simplex diameter
    int max_evals = 60000;       // per start, including restarts
    int restarts = 2;            // re-inflated restarts from the incumbent
};

struct NelderMeadResult {
    std::vector<double> x;
    double f = 0.0;
    int evaluations = 0;
    double simplex_diameter = 0.0;
    bool converged = false;
    bool stagnation = false;  // diameter collapsed without meeting f_tol
};

using ObjectiveFn = std::function<double(std::span<const double>)>;

NelderMeadResult nelder_mead(const ObjectiveFn& f, std::span<const double> start,
                             std::span<const double> steps,
                             const NelderMeadOptions& options = {});

}  // namespace qrab
