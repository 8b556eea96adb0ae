#pragma once

// Superpotential and potential of the deformed radial oscillator on (0, inf):
//
//   W(x) = x - (g+l)/x - xi1'/xi1 + xi0'/xi0,     V(x) = W(x)^2 - W'(x),
//
// where xi0 = xi_l(x^2; g), xi1 = xi_l(x^2; g+1).  At l = 0 this collapses to
// the plain radial oscillator W = x - g/x.  Three independent constructions
// of V are provided (factorized, gauge-transform, closed-form); they must
// agree identically, and tests pin that down to coefficient level.

#include <cmath>
#include <complex>

#include "deform.hpp"
#include "rational.hpp"

namespace xlq {

inline Rational superpotential(const Params& p) {
    const double gl = p.g + p.ell;
    const Poly xi0 = deforming_poly(p, 0);
    const Poly xi1 = deforming_poly(p, 1);
    const Poly X = Poly::monomial(1);
    const Poly num =
        X * X * xi0 * xi1 - gl * (xi0 * xi1) - X * xi1.derivative() * xi0 + X * xi0.derivative() * xi1;
    return {num, X * xi0 * xi1};
}

// V = W^2 - W' over the squared denominator.
inline Rational potential(const Params& p) { return superpotential(p).square_minus_derivative(); }

// -x + (g+l)/x - xi0'/xi0: superpotential of the partner construction before
// the deformation is transferred to the shifted index.
inline Rational base_term(const Params& p) {
    const double gl = p.g + p.ell;
    const Poly xi0 = deforming_poly(p, 0);
    const Poly X = Poly::monomial(1);
    Poly num = Poly{} - (X * X * xi0) + gl * xi0 - X * xi0.derivative();
    return {num, X * xi0};
}

// V written through the gauge factor xi1:  U0^2 + U0' + xi1''/xi1 + 2 U0 xi1'/xi1.
inline Rational potential_gauge_form(const Params& p) {
    const Rational U0 = base_term(p);
    const Poly xi1 = deforming_poly(p, 1);
    const Rational U0sq_plus_d = {U0.num * U0.num + U0.num.derivative() * U0.den -
                                      U0.num * U0.den.derivative(),
                                  U0.den * U0.den};
    // common denominator U0.den^2 * xi1
    const Poly den = U0sq_plus_d.den * xi1;
    Poly num = U0sq_plus_d.num * xi1;
    num += xi1.derivative().derivative() * U0sq_plus_d.den;
    num += 2.0 * (U0.num * U0.den * xi1.derivative());
    return {num, den};
}

// Closed form after the curvature identity is applied:
//   U0^2 + U0' - 4 x xi1'/xi0 + 4 l.
inline Rational potential_closed_form(const Params& p) {
    const Rational U0 = base_term(p);
    const Poly xi0 = deforming_poly(p, 0);
    const Poly xi1 = deforming_poly(p, 1);
    const Poly X = Poly::monomial(1);
    const Rational U0sq_plus_d = {U0.num * U0.num + U0.num.derivative() * U0.den -
                                      U0.num * U0.den.derivative(),
                                  U0.den * U0.den};
    const Poly den = U0sq_plus_d.den * xi0;
    Poly num = U0sq_plus_d.num * xi0;
    num -= 4.0 * (X * xi1.derivative() * U0sq_plus_d.den);
    num += (4.0 * p.ell) * (den);
    return {num, den};
}

// Residual of the curvature identity satisfied by the shifted deforming
// polynomial:  x xi1'' + 2 (x^2 + g + l) xi1' - 4 l x xi1 == 0.
// Returned as |residual(x)| / (termwise magnitude sum), so ~1e-16 when exact.
inline double curvature_identity_residual(const Params& p, double x) {
    const double gl = p.g + p.ell;
    const Poly xi1 = deforming_poly(p, 1);
    const Poly d1 = xi1.derivative();
    const Poly d2 = d1.derivative();
    const double t1 = x * d2(x);
    const double t2 = 2.0 * (x * x + gl) * d1(x);
    const double t3 = -4.0 * p.ell * x * xi1(x);
    const double scale = std::abs(t1) + std::abs(t2) + std::abs(t3) + 1.0;
    return std::abs(t1 + t2 + t3) / scale;
}

// Residual of the index-shift identity  xi0' == 2 x (xi1 - xi0).
inline double shift_identity_residual(const Params& p) {
    const Poly xi0 = deforming_poly(p, 0);
    const Poly xi1 = deforming_poly(p, 1);
    const Poly X = Poly::monomial(1);
    const Poly diff = xi0.derivative() - 2.0 * (X * (xi1 - xi0));
    const double scale = std::max(1.0, xi0.derivative().max_abs_coeff());
    return diff.max_abs_coeff() / scale;
}

// Unnormalized ground state  psi_0(z) = z^(g+l) exp(-z^2/2) xi1(z)/xi0(z),
// analytic near the positive real axis.
inline cplx ground_state_unnormalized(const Params& p, cplx z) {
    const Poly xi0 = deforming_poly(p, 0);
    const Poly xi1 = deforming_poly(p, 1);
    return std::pow(z, cplx(p.g + p.ell)) * std::exp(-z * z * 0.5) * xi1(z) / xi0(z);
}

// W recovered as -psi_0'/psi_0 by complex-step differentiation (exact to
// machine precision; no subtractive cancellation).
inline double superpotential_from_ground_state(const Params& p, double x) {
    const double h = 1e-120;
    const cplx up = ground_state_unnormalized(p, cplx(x, h));
    return -up.imag() / (h * up.real());
}

}  // namespace xlq
