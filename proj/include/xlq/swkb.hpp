#pragma once

// Shifted-WKB quantization integral on the half line:
//
//   I(E) = (1/pi) int_{x1}^{x2} sqrt(E - W(x)^2) dx,
//
// with x1 < x2 the positive turning points (W^2 = E).  The condition
// I(E_n) = n is exact for the undeformed l = 0 oscillator; for l >= 1 the
// deviation is small but genuinely nonzero, and this module measures it.
//
// Substituting x = m + h sin(theta) absorbs the square-root endpoint behavior:
// E - W^2 = (x - x1)(x2 - x) R(x) with R positive and analytic on the
// interval, so the integrand becomes h^2 cos^2(theta) sqrt(R), smooth on
// [-pi/2, pi/2], and Gauss-Legendre panels converge geometrically.

#include <cmath>

#include "contour.hpp"
#include "hamiltonian.hpp"
#include "quadrature.hpp"

namespace xlq {

struct TurningPoints {
    double x1 = 0.0, x2 = 0.0;
};

inline TurningPoints turning_points(const Params& p, double E) {
    // only the two positive real roots of E D^2 - N^2 are needed; skip the
    // cut pairing and sign anchoring of the full branch field
    if (!(E > 0.0)) throw TurningPointError("turning_points: requires E > 0");
    const Rational W = superpotential(p);
    const Poly Q = E * (W.den * W.den) - W.num * W.num;
    std::vector<double> real_pos;
    for (cplx r : roots_even(Q))
        if (r.imag() == 0.0 && r.real() > 0.0) real_pos.push_back(r.real());
    if (real_pos.size() != 2)
        throw TurningPointError("turning_points: expected two positive turning points, got " +
                                std::to_string(real_pos.size()));
    std::sort(real_pos.begin(), real_pos.end());
    const double wm = W(0.5 * (real_pos[0] + real_pos[1]));
    if (!(E - wm * wm > 0.0))
        throw TurningPointError("turning_points: E - W^2 not positive between turning points");
    return {real_pos[0], real_pos[1]};
}

inline double swkb_integral(const Params& p, double E) {
    p.validate();
    if (E <= 0.0) return 0.0;
    const auto [x1, x2] = turning_points(p, E);
    const Rational W = superpotential(p);
    const double m = 0.5 * (x1 + x2), h = 0.5 * (x2 - x1);
    const auto f = [&](double th) {
        const double x = m + h * std::sin(th);
        const double w = W(x);
        const double c = E - w * w;
        return std::sqrt(std::max(0.0, c)) * h * std::cos(th);
    };
    return integrate_real(f, -M_PI / 2.0, M_PI / 2.0, 1e-13) / M_PI;
}

// solve I(E) = n for E; I is strictly increasing in E
inline double swkb_energy_solve(const Params& p, int n, double tol = 1e-11) {
    if (n < 0) throw Error("swkb_energy_solve: n must be >= 0");
    if (n == 0) return 0.0;  // I(E) -> 0 as E -> 0+, so the root is the edge
    double lo = std::max(1e-8, 4.0 * n - 3.0), hi = 4.0 * n + 3.0;
    double flo = swkb_integral(p, lo) - n;
    double fhi = swkb_integral(p, hi) - n;
    if (flo > 0.0 || fhi < 0.0)
        throw BracketError("swkb_energy_solve: root not bracketed by (" + std::to_string(lo) +
                           ", " + std::to_string(hi) + ")");
    // bisection with a secant refinement once the interval is small
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        double mid;
        if (hi - lo < 1e-3 && fhi != flo) {
            mid = lo - flo * (hi - lo) / (fhi - flo);  // secant
            const double margin = 0.1 * (hi - lo);
            if (!(mid > lo + margin && mid < hi - margin)) mid = 0.5 * (lo + hi);
        } else {
            mid = 0.5 * (lo + hi);
        }
        const double fm = swkb_integral(p, mid) - n;
        if (fm == 0.0) return mid;
        if (fm < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace xlq
