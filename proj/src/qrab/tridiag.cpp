#include "qrab/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qrab/errors.hpp"

namespace qrab {

namespace {

// Gershgorin bounds [lo, hi] containing the whole spectrum.
std::pair<double, double> gershgorin(const SymmetricTridiagonal& t) {
    const int n = t.size();
    double lo = std::numeric_limits<double>::max();
    double hi = std::numeric_limits<double>::lowest();
    for (int i = 0; i < n; ++i) {
        const double left = (i > 0) ? std::abs(t.offdiag[i - 1]) : 0.0;
        const double right = (i < n - 1) ? std::abs(t.offdiag[i]) : 0.0;
        lo = std::min(lo, t.diag[i] - left - right);
        hi = std::max(hi, t.diag[i] + left + right);
    }
    return {lo, hi};
}

double pivot_floor(const SymmetricTridiagonal& t) {
    double max_off = 0.0;
    for (double e : t.offdiag) max_off = std::max(max_off, std::abs(e));
    return std::numeric_limits<double>::min() * std::max(1.0, max_off * max_off);
}

}  // namespace

int count_eigenvalues_below(const SymmetricTridiagonal& t, double x) {
    const int n = t.size();
    const double pivmin = pivot_floor(t);
    int count = 0;
    double d = 1.0;
    for (int i = 0; i < n; ++i) {
        const double e2 = (i > 0) ? t.offdiag[i - 1] * t.offdiag[i - 1] : 0.0;
        d = t.diag[i] - x - e2 / d;
        if (std::abs(d) < pivmin) d = -pivmin;
        if (d < 0.0) ++count;
    }
    return count;
}

double kth_eigenvalue(const SymmetricTridiagonal& t, int k, double tol) {
    const int n = t.size();
    if (k < 0 || k >= n) throw DomainError("kth_eigenvalue: index out of range");
    if (!(tol > 0.0)) throw DomainError("kth_eigenvalue: tol must be positive");
    auto [lo, hi] = gershgorin(t);
    while (hi - lo > tol + 4.0 * std::numeric_limits<double>::epsilon() *
                                (std::abs(lo) + std::abs(hi))) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (count_eigenvalues_below(t, mid) > k) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double smallest_eigenvalue(const SymmetricTridiagonal& t, double tol) {
    return kth_eigenvalue(t, 0, tol);
}

std::vector<double> all_eigenvalues(const SymmetricTridiagonal& t, double tol) {
    const int n = t.size();
    std::vector<double> values(n);
    auto [lo, hi] = gershgorin(t);
    double left = lo;
    for (int k = 0; k < n; ++k) {
        double a = left;
        double b = hi;
        while (b - a > tol + 4.0 * std::numeric_limits<double>::epsilon() *
                                  (std::abs(a) + std::abs(b))) {
            const double mid = 0.5 * (a + b);
            if (mid == a || mid == b) break;
            if (count_eigenvalues_below(t, mid) > k) {
                b = mid;
            } else {
                a = mid;
            }
        }
        values[k] = 0.5 * (a + b);
        left = a;  // eigenvalues are sorted; reuse the bracket
    }
    return values;
}

namespace {

// Solve (T - shift·I) x = rhs by Gaussian elimination with partial
// pivoting; the fill-in band `upper2` appears when rows are swapped.
// Returns false if a pivot collapses.
bool shifted_solve(const SymmetricTridiagonal& t, double shift,
                   std::vector<double>& x) {
    const int n = t.size();
    std::vector<double> lower(n, 0.0), main(n), upper(n, 0.0), upper2(n, 0.0);
    for (int i = 0; i < n; ++i) {
        main[i] = t.diag[i] - shift;
        if (i < n - 1) upper[i] = t.offdiag[i];
        if (i > 0) lower[i] = t.offdiag[i - 1];
    }
    const double tiny = pivot_floor(t) / std::numeric_limits<double>::epsilon();
    for (int i = 0; i < n - 1; ++i) {
        if (std::abs(lower[i + 1]) > std::abs(main[i])) {
            std::swap(main[i], lower[i + 1]);
            std::swap(upper[i], main[i + 1]);
            std::swap(upper2[i], upper[i + 1]);
            std::swap(x[i], x[i + 1]);
        }
        if (std::abs(main[i]) < tiny) main[i] = (main[i] < 0 ? -tiny : tiny);
        const double m = lower[i + 1] / main[i];
        main[i + 1] -= m * upper[i];
        upper[i + 1] -= m * upper2[i];
        x[i + 1] -= m * x[i];
    }
    if (std::abs(main[n - 1]) < tiny) {
        main[n - 1] = (main[n - 1] < 0 ? -tiny : tiny);
    }
    for (int i = n - 1; i >= 0; --i) {
        double v = x[i];
        if (i < n - 1) v -= upper[i] * x[i + 1];
        if (i < n - 2) v -= upper2[i] * x[i + 2];
        x[i] = v / main[i];
        if (!std::isfinite(x[i])) return false;
    }
    return true;
}

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return std::sqrt(s);
}

}  // namespace

GroundPair ground_eigenpair(const SymmetricTridiagonal& t, double tol) {
    if (!(tol > 0.0)) throw DomainError("ground_eigenpair: tol must be positive");
    const int n = t.size();
    if (n == 0) throw DomainError("ground_eigenpair: empty matrix");

    const double lambda = smallest_eigenvalue(t, tol);
    double t_norm = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = std::abs(t.diag[i]);
        if (i > 0) row += std::abs(t.offdiag[i - 1]);
        if (i < n - 1) row += std::abs(t.offdiag[i]);
        t_norm = std::max(t_norm, row);
    }
    const double resid_ok =
        std::max(10.0 * tol, 64.0 * std::numeric_limits<double>::epsilon() *
                                 std::max(1.0, t_norm));

    GroundPair best;
    best.residual = std::numeric_limits<double>::max();
    for (int attempt = 0; attempt < 5; ++attempt) {
        const double shift =
            lambda + attempt * 10.0 * tol * std::max(1.0, std::abs(lambda));
        std::vector<double> v(n);
        for (int i = 0; i < n; ++i) {
            v[i] = ((i % 2 == 0) ? 1.0 : -1.0) * (1.0 + 0.3 * std::sin(0.7 * i));
        }
        double nv = norm2(v);
        for (double& c : v) c /= nv;

        bool ok = true;
        GroundPair pair;
        for (int sweep = 1; sweep <= 3; ++sweep) {
            if (!shifted_solve(t, shift, v)) {
                ok = false;
                break;
            }
            nv = norm2(v);
            if (!(nv > 0.0) || !std::isfinite(nv)) {
                ok = false;
                break;
            }
            for (double& c : v) c /= nv;
            pair.sweeps = sweep;

            // Rayleigh quotient and residual.
            double rho = 0.0;
            for (int i = 0; i < n; ++i) {
                double tv = t.diag[i] * v[i];
                if (i > 0) tv += t.offdiag[i - 1] * v[i - 1];
                if (i < n - 1) tv += t.offdiag[i] * v[i + 1];
                rho += v[i] * tv;
            }
            double res = 0.0;
            for (int i = 0; i < n; ++i) {
                double tv = t.diag[i] * v[i];
                if (i > 0) tv += t.offdiag[i - 1] * v[i - 1];
                if (i < n - 1) tv += t.offdiag[i] * v[i + 1];
                const double r = tv - rho * v[i];
                res += r * r;
            }
            pair.value = rho;
            pair.residual = std::sqrt(res);
            pair.vector = v;
            if (pair.residual <= resid_ok && sweep >= 2) break;
        }
        if (ok && pair.residual < best.residual) best = pair;
        if (best.residual <= resid_ok) break;
    }
    if (best.residual > resid_ok) {
        throw NumericError("ground_eigenpair: inverse iteration failed after 5 "
                           "perturbed-shift retries");
    }
    // Sign convention: non-negative head entry.
    if (!best.vector.empty() && best.vector[0] < 0.0) {
        for (double& c : best.vector) c = -c;
    }
    return best;
}

}  // namespace qrab
