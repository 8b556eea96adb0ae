#pragma once

// Generalized Laguerre polynomials L_n^(alpha) via the stable three-term
// recurrence, returned as coefficient polynomials in the argument.

#include <cmath>

#include "poly.hpp"

namespace xlq {

// L_0 = 1, L_1 = 1 + alpha - y,
// (k+1) L_{k+1} = (2k + 1 + alpha - y) L_k - (k + alpha) L_{k-1).
inline Poly laguerre(int n, double alpha) {
    Poly Lm = Poly::constant(1.0);
    if (n == 0) return Lm;
    Poly Lc{{1.0 + alpha, -1.0}};
    for (int k = 1; k < n; ++k) {
        Poly Ln = (1.0 / (k + 1)) *
                  (Poly{{2.0 * k + 1.0 + alpha, -1.0}} * Lc - (k + alpha) * Lm);
        Lm = std::move(Lc);
        Lc = std::move(Ln);
    }
    return Lc;
}

// Independent check path: truncating series
// L_n^(alpha)(y) = sum_k (-1)^k binom(n+alpha, n-k) y^k / k!.
inline double laguerre_series(int n, double alpha, double y) {
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        double binom = 1.0;  // gamma(n+alpha+1) / (gamma(k+alpha+1) gamma(n-k+1))
        binom = std::exp(std::lgamma(n + alpha + 1.0) - std::lgamma(k + alpha + 1.0) -
                         std::lgamma(n - k + 1.0));
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum += sign * binom * std::pow(y, k) / std::tgamma(k + 1.0);
    }
    return sum;
}

}  // namespace xlq
