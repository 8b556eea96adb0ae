#pragma once

// The deforming polynomial family xi_l(x^2; g): a Laguerre polynomial of
// degree l evaluated at -x^2, with index alpha = g + l - 3/2 (optionally
// shifted g -> g + shift).  For l >= 0 and g > 1/2 it is strictly positive on
// the real line, so dividing by it never creates real singularities.

#include "laguerre.hpp"
#include "poly.hpp"

namespace xlq {

struct Params {
    double g = 1.0;  // centrifugal strength, must be > 1/2
    int ell = 1;     // deformation degree, must be >= 0

    void validate() const {
        if (!(g > 0.5)) throw Error("Params: g must be > 1/2");
        if (ell < 0) throw Error("Params: ell must be >= 0");
    }
};

// xi_l(x^2; g + shift) as an even polynomial in x.
inline Poly deforming_poly(const Params& p, int shift = 0) {
    p.validate();
    const Poly L = laguerre(p.ell, p.g + shift + p.ell - 1.5);
    // substitute y -> -x^2
    std::vector<double> cx(2 * p.ell + 1, 0.0);
    for (int k = 0; k <= L.degree(); ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        cx[2 * k] = sign * L.c[k];
    }
    return Poly{std::move(cx)};
}

}  // namespace xlq
