#pragma once

// Logarithmic-derivative momentum function of the n-th bound state,
//
//   q_n(x) = psi_n'/psi_n = -x + (g+l)/x - xi0'/xi0 + P_n'/P_n,
//
// a rational function solving the Riccati equation q^2 + q' + E_n - V = 0.
// Its pole structure encodes the quantum number: the residue is +(g+l) at the
// origin, -1 at each (complex) zero of xi0, +1 at each zero of P_n, and the
// total must balance the 1/x coefficient E/2 + (g+l) of the large-x expansion.

#include <algorithm>
#include <cmath>
#include <vector>

#include "exceptional.hpp"
#include "hamiltonian.hpp"
#include "poly.hpp"
#include "quadrature.hpp"
#include "rational.hpp"

namespace xlq {

struct MomentumFunction {
    Params p;
    int n = 0;
    Poly P;    // polynomial part of psi_n
    Poly xi0;  // deforming polynomial
    Rational q;

    std::vector<cplx> moving_poles() const { return roots_even(P); }
    std::vector<cplx> fixed_poles() const { return roots_even(xi0); }
};

inline MomentumFunction momentum_function(const Params& p, int n) {
    MomentumFunction m{p, n, exceptional_poly(p, n).in_x, deforming_poly(p, 0), {}};
    const double gl = p.g + p.ell;
    const Poly X = Poly::monomial(1);
    const Poly den = X * m.xi0 * m.P;
    Poly num = Poly{} - (X * X * m.xi0 * m.P) + gl * (m.xi0 * m.P);
    num -= X * m.xi0.derivative() * m.P;
    num += X * m.xi0 * m.P.derivative();
    m.q = {num, den};
    return m;
}

// Riccati residual q^2 + q' + E - V at a point, relative to term magnitude.
inline double riccati_residual(const MomentumFunction& m, double x) {
    const double E = 4.0 * m.n;
    const double q = m.q(x);
    const double qp = m.q.derivative()(x);
    const double V = potential(m.p)(x);
    const double scale = q * q + std::abs(qp) + std::abs(E) + std::abs(V) + 1.0;
    return std::abs(q * q + qp + E - V) / scale;
}

// residue of q at a point by a small contour (radius kept clear of the other
// poles)
inline cplx qmf_residue_measured(const MomentumFunction& m, cplx pole) {
    double d = std::abs(pole) > 0.0 ? std::abs(pole) : 1e300;
    for (cplx z : m.moving_poles())
        if (std::abs(z - pole) > 1e-10) d = std::min(d, std::abs(z - pole));
    for (cplx z : m.fixed_poles())
        if (std::abs(z - pole) > 1e-10) d = std::min(d, std::abs(z - pole));
    d = std::min(d, 1.0);
    const cplx v = integrate_circle([&](cplx z) { return m.q(z); }, pole, 0.3 * d);
    return v / cplx(0.0, 2.0 * M_PI);
}

// Root census of the state polynomial and the deforming polynomial.
struct SingularityCensus {
    int moving_real_positive = 0;
    int moving_real_negative = 0;
    int moving_off_axis = 0;
    int fixed_total = 0;
    double fixed_max_abs_real = 0.0;  // deviation of fixed poles from the imaginary axis
};

inline SingularityCensus singularity_census(const MomentumFunction& m) {
    SingularityCensus c;
    for (cplx z : m.moving_poles()) {
        if (z.imag() == 0.0 && z.real() > 0.0)
            ++c.moving_real_positive;
        else if (z.imag() == 0.0 && z.real() < 0.0)
            ++c.moving_real_negative;
        else
            ++c.moving_off_axis;
    }
    for (cplx z : m.fixed_poles()) {
        ++c.fixed_total;
        c.fixed_max_abs_real = std::max(c.fixed_max_abs_real, std::abs(z.real()));
    }
    return c;
}

// Quantum number recovered from the global residue balance: the 1/x
// coefficient of q + x, measured on a large circle, equals E/2 + (g+l);
// with the origin and fixed-pole residues removed, half of what is left
// counts the moving poles on the positive half line.
inline double quantization_index(const MomentumFunction& m) {
    double R = 1.0;
    for (cplx z : m.moving_poles()) R = std::max(R, std::abs(z));
    for (cplx z : m.fixed_poles()) R = std::max(R, std::abs(z));
    R = 2.0 * R + 2.0;
    const cplx tot =
        integrate_circle([&](cplx z) { return m.q(z) + z; }, cplx(0.0), R) / cplx(0.0, 2.0 * M_PI);
    // tot = (g+l) + 2n identically; solve for n
    const double gl = m.p.g + m.p.ell;
    const double idx = 0.5 * (tot.real() - gl);
    if (std::abs(idx - std::round(idx)) > 0.05)
        throw AmbiguityError("quantization_index: count " + std::to_string(idx) +
                             " is not near an integer");
    return idx;
}

}  // namespace xlq
