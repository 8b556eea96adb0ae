#pragma once

// Independent ground truth: a second-order finite-difference discretization of
// -psi'' + V psi = E psi on (x_min, x_max) with Dirichlet ends.  Eigenvalues
// come from Sturm-sequence bisection on the tridiagonal matrix, eigenvectors
// from shifted inverse iteration, and two grid resolutions are combined by
// Richardson extrapolation.  This header deliberately knows nothing about the
// closed-form wavefunction construction: it consumes only the rational
// potential, so agreement with the algebraic spectrum is a genuine
// cross-check and not a tautology.

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"
#include "hamiltonian.hpp"

namespace xlq {

// Default-constructed (points == 0) means "let the solver pick via default_grid".
struct GridSpec {
    double x_min = 0.0;
    double x_max = 0.0;
    int points = 0;
};

inline GridSpec default_grid(int k) { return {1e-3, std::sqrt(4.0 * k) + 8.0, 8000}; }

struct EigenResult {
    int index = 0;
    double energy = 0.0;         // Richardson-extrapolated
    double energy_coarse = 0.0;  // grid as specified
    double energy_fine = 0.0;    // step halved
    int node_count = 0;
    GridSpec grid;               // fine grid (the one the eigenvector lives on)
    double boundary_exponent = 0.0;  // g + l
    std::vector<double> x;       // fine-grid abscissae
    std::vector<double> vec;     // eigenvector on the fine grid, max-norm 1
};

namespace detail {

// number of eigenvalues of the tridiagonal (d, e) strictly below lambda
inline int sturm_count(const std::vector<double>& d, double e, double lambda) {
    int count = 0;
    double q = 1.0;
    const double tiny = 1e-300;
    for (size_t i = 0; i < d.size(); ++i) {
        q = d[i] - lambda - (i ? e * e / q : 0.0);
        if (q == 0.0) q = tiny;
        if (q < 0.0) ++count;
    }
    return count;
}

inline double bisect_eigenvalue(const std::vector<double>& d, double e, int index, double lo,
                                double hi) {
    for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(d, e, mid) > index)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

// one shifted-inverse-iteration eigenvector, Thomas solves
inline std::vector<double> inverse_iteration(const std::vector<double>& d, double e,
                                             double lambda) {
    const size_t n = d.size();
    const double shift = lambda + 1e-9 * std::max(1.0, std::abs(lambda));
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<double> v(n), diag(n), rhs(n);
    for (double& x : v) x = uni(rng);
    for (int sweep = 0; sweep < 3; ++sweep) {
        for (size_t i = 0; i < n; ++i) {
            diag[i] = d[i] - shift;
            rhs[i] = v[i];
        }
        // forward elimination
        for (size_t i = 1; i < n; ++i) {
            if (diag[i - 1] == 0.0) diag[i - 1] = 1e-300;
            const double w = e / diag[i - 1];
            diag[i] -= w * e;
            rhs[i] -= w * rhs[i - 1];
        }
        if (diag[n - 1] == 0.0) diag[n - 1] = 1e-300;
        v[n - 1] = rhs[n - 1] / diag[n - 1];
        for (size_t i = n - 1; i-- > 0;) v[i] = (rhs[i] - e * v[i + 1]) / diag[i];
        double mx = 0.0;
        for (double x : v) mx = std::max(mx, std::abs(x));
        for (double& x : v) x /= mx;
    }
    return v;
}

inline int count_nodes(const std::vector<double>& v) {
    double mx = 0.0;
    for (double x : v) mx = std::max(mx, std::abs(x));
    const double floor = 1e-6 * mx;
    int nodes = 0;
    double prev = 0.0;
    for (double x : v) {
        if (std::abs(x) < floor) continue;
        if (prev != 0.0 && x * prev < 0.0) ++nodes;
        prev = x;
    }
    return nodes;
}

struct TridiagSpectrum {
    std::vector<double> energies;
    std::vector<double> d;
    double e = 0.0;
    std::vector<double> xs;
};

inline TridiagSpectrum solve_grid(const std::function<double(double)>& V, const GridSpec& grid,
                                  int k) {
    TridiagSpectrum out;
    const int n = grid.points;
    const double h = (grid.x_max - grid.x_min) / (n + 1);
    out.e = -1.0 / (h * h);
    out.d.resize(n);
    out.xs.resize(n);
    for (int i = 0; i < n; ++i) {
        out.xs[i] = grid.x_min + h * (i + 1);
        out.d[i] = 2.0 / (h * h) + V(out.xs[i]);
    }
    double lo = out.d[0], hi = out.d[0];
    for (double v : out.d) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    lo -= 2.0 * std::abs(out.e);
    hi += 2.0 * std::abs(out.e);
    for (int i = 0; i < k; ++i) out.energies.push_back(bisect_eigenvalue(out.d, out.e, i, lo, hi));
    return out;
}

}  // namespace detail

// lowest k eigenpairs; tol controls the inter-resolution consistency guard
inline std::vector<EigenResult> solve_spectrum(const Params& p, int k, GridSpec grid = {},
                                               double tol = 1e-5) {
    p.validate();
    if (k < 1) throw Error("solve_spectrum: k must be >= 1");
    if (grid.points <= 0) grid = default_grid(k);
    if (grid.x_min > 1e-3 + 1e-15)
        throw GridError("solve_spectrum: grid must resolve the 1/x^2 core (x_min <= 1e-3)");
    if (grid.x_max < std::sqrt(4.0 * k) + 6.0)
        throw GridError("solve_spectrum: grid must cover the Gaussian tail");

    const Rational Vr = potential(p);
    const auto V = [&](double x) { return Vr(x); };

    const auto coarse = detail::solve_grid(V, grid, k);
    GridSpec fine_grid = grid;
    fine_grid.points = 2 * grid.points + 1;  // exactly halves the step
    const auto fine = detail::solve_grid(V, fine_grid, k);

    std::vector<EigenResult> results;
    for (int i = 0; i < k; ++i) {
        EigenResult r;
        r.index = i;
        r.energy_coarse = coarse.energies[i];
        r.energy_fine = fine.energies[i];
        if (std::abs(r.energy_fine - r.energy_coarse) > 10.0 * tol)
            throw GridError("solve_spectrum: eigenvalue " + std::to_string(i) + " shifted by " +
                            std::to_string(std::abs(r.energy_fine - r.energy_coarse)) +
                            " between resolutions");
        r.energy = (4.0 * r.energy_fine - r.energy_coarse) / 3.0;
        r.grid = fine_grid;
        r.boundary_exponent = p.g + p.ell;
        r.x = fine.xs;
        r.vec = detail::inverse_iteration(fine.d, fine.e, fine.energies[i]);
        r.node_count = detail::count_nodes(r.vec);
        results.push_back(std::move(r));
    }
    return results;
}

// max-norm distance between the oracle eigenvector and a closed-form
// wavefunction sampled on the same grid, both max-normalized, sign-aligned
inline double compare_wavefunction(const std::function<double(double)>& analytic,
                                   const EigenResult& r) {
    std::vector<double> a(r.x.size());
    double mx = 0.0;
    size_t peak = 0;
    for (size_t i = 0; i < r.x.size(); ++i) {
        a[i] = analytic(r.x[i]);
        if (std::abs(a[i]) > mx) {
            mx = std::abs(a[i]);
            peak = i;
        }
    }
    if (mx == 0.0) throw Error("compare_wavefunction: analytic function vanishes on the grid");
    const double sign = (a[peak] * r.vec[peak] >= 0.0) ? 1.0 : -1.0;
    double dist = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        dist = std::max(dist, std::abs(a[i] / mx - sign * r.vec[i]));
    return dist;
}

}  // namespace xlq
