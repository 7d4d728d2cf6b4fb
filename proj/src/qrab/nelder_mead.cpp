#include "qrab/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qrab/errors.hpp"

namespace qrab {

namespace {

struct Simplex {
    std::vector<std::vector<double>> points;
    std::vector<double> values;

    void sort() {
        std::vector<std::size_t> order(values.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        std::vector<std::vector<double>> pts;
        std::vector<double> vals;
        pts.reserve(points.size());
        vals.reserve(values.size());
        for (std::size_t i : order) {
            pts.push_back(std::move(points[i]));
            vals.push_back(values[i]);
        }
        points = std::move(pts);
        values = std::move(vals);
    }

    double diameter() const {
        double d = 0.0;
        for (std::size_t i = 1; i < points.size(); ++i) {
            double di = 0.0;
            for (std::size_t k = 0; k < points[0].size(); ++k) {
                di = std::max(di, std::abs(points[i][k] - points[0][k]));
            }
            d = std::max(d, di);
        }
        return d;
    }
};

// One simplex run until convergence or the evaluation budget runs out.
void run_simplex(const ObjectiveFn& f, Simplex& s, const NelderMeadOptions& opt,
                 int& evals, bool& converged, bool& stagnation) {
    const std::size_t dim = s.points[0].size();
    converged = false;
    stagnation = false;
    while (evals < opt.max_evals) {
        s.sort();
        const double spread = s.values.back() - s.values.front();
        const double diam = s.diameter();
        if (spread < opt.f_tol && diam < opt.x_tol) {
            converged = true;
            return;
        }
        if (diam < 1e-12) {
            stagnation = !(spread < opt.f_tol);
            converged = true;
            return;
        }

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t k = 0; k < dim; ++k) centroid[k] += s.points[i][k];
        }
        for (double& c : centroid) c /= static_cast<double>(dim);

        auto blend = [&](double t) {
            std::vector<double> p(dim);
            for (std::size_t k = 0; k < dim; ++k) {
                p[k] = centroid[k] + t * (centroid[k] - s.points.back()[k]);
            }
            return p;
        };

        std::vector<double> reflected = blend(1.0);
        const double fr = f(reflected);
        ++evals;
        if (fr < s.values.front()) {
            std::vector<double> expanded = blend(2.0);
            const double fe = f(expanded);
            ++evals;
            if (fe < fr) {
                s.points.back() = std::move(expanded);
                s.values.back() = fe;
            } else {
                s.points.back() = std::move(reflected);
                s.values.back() = fr;
            }
            continue;
        }
        if (fr < s.values[dim - 1]) {
            s.points.back() = std::move(reflected);
            s.values.back() = fr;
            continue;
        }
        if (fr < s.values.back()) {
            // Outside contraction.
            std::vector<double> contracted = blend(0.5);
            const double fc = f(contracted);
            ++evals;
            if (fc <= fr) {
                s.points.back() = std::move(contracted);
                s.values.back() = fc;
                continue;
            }
        } else {
            // Inside contraction.
            std::vector<double> contracted = blend(-0.5);
            const double fc = f(contracted);
            ++evals;
            if (fc < s.values.back()) {
                s.points.back() = std::move(contracted);
                s.values.back() = fc;
                continue;
            }
        }
        // Shrink toward the best point.
        for (std::size_t i = 1; i <= dim; ++i) {
            for (std::size_t k = 0; k < dim; ++k) {
                s.points[i][k] = 0.5 * (s.points[i][k] + s.points[0][k]);
            }
            s.values[i] = f(s.points[i]);
            ++evals;
        }
    }
}

Simplex make_simplex(const ObjectiveFn& f, std::span<const double> base,
                     std::span<const double> steps, int& evals) {
    const std::size_t dim = base.size();
    Simplex s;
    s.points.assign(dim + 1, std::vector<double>(base.begin(), base.end()));
    s.values.assign(dim + 1, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        s.points[i + 1][i] += steps[i];
    }
    for (std::size_t i = 0; i <= dim; ++i) {
        s.values[i] = f(s.points[i]);
        ++evals;
    }
    return s;
}

}  // namespace

NelderMeadResult nelder_mead(const ObjectiveFn& f, std::span<const double> start,
                             std::span<const double> steps,
                             const NelderMeadOptions& options) {
    if (start.empty() || start.size() != steps.size()) {
        throw DomainError("nelder_mead: start/steps size mismatch");
    }
    int evals = 0;
    Simplex s = make_simplex(f, start, steps, evals);
    bool converged = false;
    bool stagnation = false;
    run_simplex(f, s, options, evals, converged, stagnation);
    s.sort();

    NelderMeadResult best;
    best.x = s.points[0];
    best.f = s.values[0];
    best.simplex_diameter = s.diameter();
    best.converged = converged;
    best.stagnation = stagnation;

    // Restarts: re-inflate the simplex around the incumbent.
    std::vector<double> restart_steps(steps.begin(), steps.end());
    for (int r = 0; r < options.restarts && evals < options.max_evals; ++r) {
        for (double& st : restart_steps) st *= 0.5;
        Simplex s2 = make_simplex(f, best.x, restart_steps, evals);
        run_simplex(f, s2, options, evals, converged, stagnation);
        s2.sort();
        if (s2.values[0] < best.f) {
            best.x = s2.points[0];
            best.f = s2.values[0];
        }
        best.simplex_diameter = s2.diameter();
        best.converged = converged;
        best.stagnation = stagnation;
    }
    best.evaluations = evals;
    return best;
}

}  // namespace qrab
