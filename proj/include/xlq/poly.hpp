#pragma once

// Dense univariate polynomials with real coefficients, ascending order:
// p.c[k] is the coefficient of x^k.  Roots come from the companion matrix
// (Eigen) and are polished with a few Newton steps.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"

namespace xlq {

using cplx = std::complex<double>;

struct Poly {
    std::vector<double> c;  // ascending; empty means the zero polynomial

    Poly() = default;
    explicit Poly(std::vector<double> coeffs) : c(std::move(coeffs)) { trim(); }
    static Poly constant(double v) { return Poly{{v}}; }
    static Poly monomial(int k, double v = 1.0) {
        std::vector<double> m(k + 1, 0.0);
        m[k] = v;
        return Poly{std::move(m)};
    }

    void trim() {
        while (!c.empty() && c.back() == 0.0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    double lead() const { return c.empty() ? 0.0 : c.back(); }

    double operator()(double x) const {
        double v = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
        return v;
    }
    cplx operator()(cplx x) const {
        cplx v = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
        return v;
    }

    Poly derivative() const {
        if (c.size() <= 1) return Poly{};
        std::vector<double> d(c.size() - 1);
        for (size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<double>(k);
        return Poly{std::move(d)};
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (double v : c) m = std::max(m, std::abs(v));
        return m;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<double> r(std::max(a.c.size(), b.c.size()), 0.0);
        for (size_t k = 0; k < a.c.size(); ++k) r[k] += a.c[k];
        for (size_t k = 0; k < b.c.size(); ++k) r[k] += b.c[k];
        return Poly{std::move(r)};
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<double> r(std::max(a.c.size(), b.c.size()), 0.0);
        for (size_t k = 0; k < a.c.size(); ++k) r[k] += a.c[k];
        for (size_t k = 0; k < b.c.size(); ++k) r[k] -= b.c[k];
        return Poly{std::move(r)};
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly{};
        std::vector<double> r(a.c.size() + b.c.size() - 1, 0.0);
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return Poly{std::move(r)};
    }
    friend Poly operator*(double s, const Poly& a) {
        std::vector<double> r(a.c);
        for (double& v : r) v *= s;
        return Poly{std::move(r)};
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }
};

// p(x) with every odd coefficient zero, reinterpreted as a polynomial in u = x^2.
inline Poly even_part_in_u(const Poly& p, double odd_tol = 0.0) {
    std::vector<double> u((p.c.size() + 1) / 2, 0.0);
    const double cap = p.max_abs_coeff();
    for (size_t k = 0; k < p.c.size(); ++k) {
        if (k % 2 == 0)
            u[k / 2] = p.c[k];
        else if (std::abs(p.c[k]) > odd_tol * cap)
            throw Error("even_part_in_u: polynomial has a nonzero odd coefficient");
    }
    return Poly{std::move(u)};
}

namespace detail {

inline std::vector<cplx> companion_roots(const std::vector<double>& ascending) {
    const int n = static_cast<int>(ascending.size()) - 1;
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -ascending[i] / ascending[n];
    Eigen::EigenSolver<Eigen::MatrixXd> es(C, /*computeEigenvectors=*/false);
    std::vector<cplx> r(n);
    for (int i = 0; i < n; ++i) r[i] = es.eigenvalues()[i];
    return r;
}

}  // namespace detail

// All complex roots, companion matrix + Newton polish.  Roots with
// |imag| <= imag_snap * (1 + |real|) are snapped onto the real axis, and
// conjugate symmetry is enforced by construction of the polish.
inline std::vector<cplx> roots(const Poly& p, double imag_snap = 1e-9) {
    Poly q = p;
    q.trim();
    if (q.degree() <= 0) return {};
    auto rs = detail::companion_roots(q.c);
    const Poly dp = q.derivative();
    const double scale = q.max_abs_coeff();
    // attainable residual floor at z: roundoff of Horner evaluation there
    const auto mag = [&](cplx z) {
        const double az = std::abs(z);
        double s = 0.0;
        for (auto it = q.c.rbegin(); it != q.c.rend(); ++it) s = s * az + std::abs(*it);
        return std::max(scale, s);
    };
    for (auto& r : rs) {
        for (int it = 0; it < 30; ++it) {
            const cplx f = q(r);
            if (std::abs(f) <= 1e-10 * mag(r)) break;
            const cplx df = dp(r);
            if (std::abs(df) == 0.0) break;
            r -= f / df;
        }
        if (std::abs(q(r)) > 1e-8 * mag(r))
            throw ConvergenceError("roots: Newton polish did not reach residual tolerance");
        if (std::abs(r.imag()) <= imag_snap * (1.0 + std::abs(r.real()))) r = cplx(r.real(), 0.0);
    }
    std::sort(rs.begin(), rs.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return rs;
}

// Roots of an even polynomial: solve in u = x^2, then map u -> +-sqrt(u).
// Much better conditioned than rooting in x directly, and exactly symmetric.
inline std::vector<cplx> roots_even(const Poly& p_in_x) {
    const Poly pu = even_part_in_u(p_in_x, 1e-12);
    auto us = roots(pu);
    std::vector<cplx> rs;
    rs.reserve(2 * us.size());
    for (cplx u : us) {
        cplx s = std::sqrt(u);
        if (std::abs(s.imag()) <= 1e-9 * (1.0 + std::abs(s.real()))) s = cplx(s.real(), 0.0);
        if (std::abs(s.real()) <= 1e-9 * (1.0 + std::abs(s.imag()))) s = cplx(0.0, s.imag());
        rs.push_back(s);
        rs.push_back(-s);
    }
    std::sort(rs.begin(), rs.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return rs;
}

}  // namespace xlq
