#pragma once

// Quadrature used by the contour machinery: composite 16-point Gauss-Legendre
// panels with doubling until two successive refinements agree, and a
// spectrally convergent midpoint rule for circles.

#include <array>
#include <cmath>
#include <complex>
#include <functional>

#include "errors.hpp"

namespace xlq {

namespace detail {

struct GL16 {
    std::array<double, 16> node{}, weight{};
    GL16() {
        // roots of Legendre P_16 by Newton from Chebyshev initial guesses
        constexpr int n = 16;
        for (int i = 0; i < n; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                pp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / pp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            node[i] = x;
            weight[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        }
    }
};

inline const GL16& gl16() {
    static const GL16 table;
    return table;
}

}  // namespace detail

// integral over t in [0,1] of a complex-valued function, adaptive panel doubling
inline cplx integrate_unit(const std::function<cplx(double)>& f, double rel_tol = 1e-13,
                           int max_panels = 4096) {
    const auto& gl = detail::gl16();
    cplx prev{};
    bool have_prev = false;
    for (int panels = 1; panels <= max_panels; panels *= 2) {
        cplx total = 0.0;
        const double w = 1.0 / panels;
        for (int k = 0; k < panels; ++k) {
            const double mid = (k + 0.5) * w, half = 0.5 * w;
            for (int q = 0; q < 16; ++q) total += gl.weight[q] * f(mid + half * gl.node[q]) * half;
        }
        if (have_prev && std::abs(total - prev) <= rel_tol * std::max(1.0, std::abs(total)))
            return total;
        prev = total;
        have_prev = true;
    }
    throw ConvergenceError("integrate_unit: panel doubling exhausted");
}

// straight segment from a to b in the complex plane
inline cplx integrate_segment(const std::function<cplx(cplx)>& f, cplx a, cplx b,
                              double rel_tol = 1e-13) {
    const cplx d = b - a;
    return integrate_unit([&](double t) { return f(a + d * t) * d; }, rel_tol);
}

// circular arc around c, radius r, angle th0 -> th1
inline cplx integrate_arc(const std::function<cplx(cplx)>& f, cplx c, double r, double th0,
                          double th1, double rel_tol = 1e-13) {
    const double dth = th1 - th0;
    return integrate_unit(
        [&](double t) {
            const cplx e = std::polar(r, th0 + dth * t);
            return f(c + e) * cplx(0.0, dth) * e;
        },
        rel_tol);
}

// full circle: midpoint rule in the angle is spectrally accurate for
// integrands analytic in an annulus around the path
inline cplx integrate_circle(const std::function<cplx(cplx)>& f, cplx c, double r,
                             double rel_tol = 1e-13) {
    cplx prev{};
    bool have_prev = false;
    for (int m = 64; m <= 65536; m *= 2) {
        cplx total = 0.0;
        for (int k = 0; k < m; ++k) {
            const cplx e = std::polar(r, 2.0 * M_PI * (k + 0.5) / m);
            total += f(c + e) * cplx(0.0, 2.0 * M_PI / m) * e;
        }
        if (have_prev && std::abs(total - prev) <= rel_tol * std::max(1.0, std::abs(total)))
            return total;
        prev = total;
        have_prev = true;
    }
    throw ConvergenceError("integrate_circle: refinement exhausted");
}

// real-valued adaptive integral on [a, b]
inline double integrate_real(const std::function<double(double)>& f, double a, double b,
                             double rel_tol = 1e-13) {
    return integrate_segment([&](cplx z) { return cplx(f(z.real()), 0.0); }, cplx(a, 0.0),
                             cplx(b, 0.0), rel_tol)
        .real();
}

}  // namespace xlq
