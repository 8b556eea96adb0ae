#pragma once

// Ratio of two real polynomials.  No gcd cancellation is attempted: callers
// that need a reduced form construct it reduced.

#include <cmath>

#include "poly.hpp"

namespace xlq {

struct Rational {
    Poly num, den;

    double operator()(double x) const {
        const double d = den(x);
        guard(d, x);
        return num(x) / d;
    }
    cplx operator()(cplx x) const {
        const cplx d = den(x);
        if (std::abs(d) <= pole_floor(std::abs(x)))
            throw PolePointError("Rational: evaluation at a pole");
        return num(x) / d;
    }

    Rational derivative() const {
        return {num.derivative() * den - num * den.derivative(), den * den};
    }

    // f^2 - f' over the common denominator den^2.
    Rational square_minus_derivative() const {
        return {num * num - num.derivative() * den + num * den.derivative(), den * den};
    }

  private:
    // Roundoff scale of the Horner evaluation: if |den(x)| is below ~eps times
    // the magnitude sum, the computed value is dominated by rounding and the
    // point is (numerically) a pole.
    double pole_floor(double ax) const {
        double s = 0.0;
        for (auto it = den.c.rbegin(); it != den.c.rend(); ++it) s = s * ax + std::abs(*it);
        return 1e-13 * s;
    }
    void guard(double d, double x) const {
        if (std::abs(d) <= pole_floor(std::abs(x)))
            throw PolePointError("Rational: evaluation at a pole");
    }
};

// Cross-multiplied agreement residual:  a - b == (a.num b.den - b.num a.den) / (...).
// Returns max residual coefficient over the largest cross-product coefficient.
inline double rational_mismatch(const Rational& a, const Rational& b) {
    const Poly lhs = a.num * b.den;
    const Poly rhs = b.num * a.den;
    const Poly diff = lhs - rhs;
    const double scale = std::max(lhs.max_abs_coeff(), rhs.max_abs_coeff());
    return scale == 0.0 ? diff.max_abs_coeff() : diff.max_abs_coeff() / scale;
}

}  // namespace xlq
