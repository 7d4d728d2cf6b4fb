// tridiag.hpp — symmetric tridiagonal eigensolver: Sturm-sequence bisection
// for selected eigenvalues plus inverse iteration for eigenvectors.
//
// Bisection follows the classic Barth–Martin–Wilkinson scheme (Handbook for
// Automatic Computation II); only the eigenpairs actually needed are
// computed, so chains of 10^5 sites stay cheap.

#pragma once

#include <vector>

namespace qrab {

struct SymmetricTridiagonal {
    std::vector<double> diag;     // n entries
    std::vector<double> offdiag;  // n-1 entries

    int size() const { return static_cast<int>(diag.size()); }
};

// Number of eigenvalues strictly below x (Sturm count via the LDLᵀ pivots).
int count_eigenvalues_below(const SymmetricTridiagonal& t, double x);

// k-th smallest eigenvalue (k = 0 is the ground value), bisected to
// interval width <= tol.
double kth_eigenvalue(const SymmetricTridiagonal& t, int k, double tol);

double smallest_eigenvalue(const SymmetricTridiagonal& t, double tol);

// All eigenvalues in ascending order (used for Golub–Welsch quadrature
// nodes; O(n²·log) — keep n modest).
std::vector<double> all_eigenvalues(const SymmetricTridiagonal& t, double tol);

struct GroundPair {
    double value = 0.0;
    std::vector<double> vector;  // unit norm
    double residual = 0.0;       // ‖Tv − λv‖₂
    int sweeps = 0;
};

// Smallest eigenpair: bisection for the value, inverse iteration with a
// partially pivoted tridiagonal factorization for the vector, Rayleigh
// polish for the returned value. Near-singular shifts are retried with a
// perturbed shift (up to 5 times) before reporting failure.
GroundPair ground_eigenpair(const SymmetricTridiagonal& t, double tol);

}  // namespace qrab
