#pragma once

// Polynomial part of the n-th bound state.  P_n is the (essentially unique)
// even polynomial of degree 2(n+l) annihilated by the confluent operator
//
//   x xi0 P'' + 2(-x^2 xi0 + (g+l) xi0 - x xi0') P' +
//       ((4n - 4l) x xi0 + 4 x^2 xi1') P  =  0,
//
// obtained by inserting psi = x^(g+l) e^(-x^2/2) P / xi0 into the eigenvalue
// problem at E = 4n.  The operator maps even polynomials to odd ones, so on
// the monomial basis {x^0, x^2, ..., x^(2(n+l))} it is a rectangular matrix
// whose one-dimensional kernel is extracted by SVD.  The result is returned
// monic in x.  n = 0 reproduces xi1 up to normalization.

#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "deform.hpp"
#include "poly.hpp"

namespace xlq {

struct ExceptionalPoly {
    Poly in_x;  // even polynomial, monic, degree 2(n+l)
    Poly in_u;  // same coefficients read in u = x^2
    double sigma_ratio = 0.0;  // second-smallest / smallest singular value
};

inline ExceptionalPoly exceptional_poly(const Params& p, int n) {
    p.validate();
    if (n < 0) throw Error("exceptional_poly: n must be >= 0");
    const double gl = p.g + p.ell;
    const Poly xi0 = deforming_poly(p, 0);
    const Poly xi1 = deforming_poly(p, 1);
    const Poly X = Poly::monomial(1);

    const Poly A = X * xi0;
    const Poly B = 2.0 * (Poly{} - (X * X * xi0) + gl * xi0 - X * xi0.derivative());
    const Poly C = (4.0 * n - 4.0 * p.ell) * (X * xi0) + 4.0 * (X * X * xi1.derivative());

    const int cols = n + p.ell + 1;      // basis x^(2j), j = 0..n+l
    const int rows = n + 2 * p.ell + 1;  // image coefficients of x^(2i+1)
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(rows, cols);
    for (int j = 0; j < cols; ++j) {
        Poly bj = Poly::monomial(2 * j);
        Poly img = A * bj.derivative().derivative() + B * bj.derivative() + C * bj;
        for (int k = 0; k <= img.degree(); ++k) {
            if (img.c[k] == 0.0) continue;
            if (k % 2 == 0) throw Error("exceptional_poly: operator image has even term");
            M((k - 1) / 2, j) = img.c[k];
        }
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double s_min = sv[cols - 1];
    const double s_next = cols >= 2 ? sv[cols - 2] : 0.0;
    if (s_min > 1e-8 * sv[0])
        throw NullspaceDimensionError("exceptional_poly: no null vector (smallest sv " +
                                      std::to_string(s_min / sv[0]) + " of largest)");
    const double ratio = s_min == 0.0 ? 1e300 : s_next / s_min;
    if (cols >= 2 && ratio < 1e6)
        throw NullspaceDimensionError("exceptional_poly: kernel not one-dimensional (sv ratio " +
                                      std::to_string(ratio) + ")");

    Eigen::VectorXd v = svd.matrixV().col(cols - 1);
    std::vector<double> cu(cols);
    const double leadv = v[cols - 1];
    for (int j = 0; j < cols; ++j) cu[j] = v[j] / leadv;  // monic in u (hence in x)
    std::vector<double> cx(2 * cols - 1, 0.0);
    for (int j = 0; j < cols; ++j) cx[2 * j] = cu[j];
    return {Poly{std::move(cx)}, Poly{std::move(cu)}, ratio};
}

}  // namespace xlq
