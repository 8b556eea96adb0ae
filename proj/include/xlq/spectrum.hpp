#pragma once

// Bound-state energies and wavefunctions.  The spectrum is E_n = 4n, the
// deformation shifts every level's wavefunction but no level's energy.
// psi_n(x) = x^(g+l) exp(-x^2/2) P_n(x) / xi0(x), normalized on (0, inf).

#include <cmath>
#include <functional>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "exceptional.hpp"
#include "hamiltonian.hpp"

namespace xlq {

inline double energy_level(int n) { return 4.0 * n; }

struct Wavefunction {
    Params p;
    int n = 0;
    Poly P;    // polynomial part, monic
    Poly xi0;  // denominator

    double unnormalized(double x) const {
        return std::pow(x, p.g + p.ell) * std::exp(-0.5 * x * x) * P(x) / xi0(x);
    }
    double operator()(double x) const { return unnormalized(x) / norm; }

    double norm = 1.0;
};

inline double wavefunction_cutoff(const Params&, int n_max) {
    return std::sqrt(4.0 * std::max(1, n_max)) + 10.0;
}

inline Wavefunction wavefunction(const Params& p, int n) {
    Wavefunction w{p, n, exceptional_poly(p, n).in_x, deforming_poly(p, 0)};
    const double xmax = wavefunction_cutoff(p, n);
    const auto f = [&](double x) {
        const double v = w.unnormalized(x);
        return v * v;
    };
    const double nrm2 = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        f, 0.0, xmax, 15, 1e-12);
    w.norm = std::sqrt(nrm2);
    return w;
}

// integral of psi_n psi_m over (0, inf); with the returned wavefunctions
// normalized this is delta_nm up to quadrature error
inline double overlap(const Wavefunction& a, const Wavefunction& b) {
    const double xmax = wavefunction_cutoff(a.p, std::max(a.n, b.n));
    const auto f = [&](double x) { return a(x) * b(x); };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, xmax, 15, 1e-12);
}

// local eigenvalue-equation residual  (-psi'' + V psi - E psi) at a point,
// with derivatives from the exact polynomial structure
inline double schrodinger_residual(const Wavefunction& w, double x) {
    // psi = exp(phi), phi = (g+l) log x - x^2/2 + log P - log xi0 (valid when P(x) != 0)
    const double gl = w.p.g + w.p.ell;
    const Poly dP = w.P.derivative();
    const Poly dxi = w.xi0.derivative();
    const double phi1 = gl / x - x + dP(x) / w.P(x) - dxi(x) / w.xi0(x);
    const double P = w.P(x), xi = w.xi0(x);
    const double phi2 = -gl / (x * x) - 1.0 + (dP.derivative()(x) * P - dP(x) * dP(x)) / (P * P) -
                        (dxi.derivative()(x) * xi - dxi(x) * dxi(x)) / (xi * xi);
    // -psi''/psi = -(phi'' + phi'^2)
    const double V = potential(w.p)(x);
    const double E = energy_level(w.n);
    return -(phi2 + phi1 * phi1) + V - E;
}

}  // namespace xlq
