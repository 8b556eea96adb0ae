#include <catch2/catch_amalgamated.hpp>

#include "xlq/exceptional.hpp"
#include "xlq/spectrum.hpp"

using Catch::Approx;
using xlq::Params;
using xlq::Poly;

TEST_CASE("n = 0 reproduces the shifted deforming polynomial", "[exceptional]") {
    for (const Params p : {Params{1.0, 1}, Params{2.5, 1}, Params{3.0, 2}, Params{1.5, 3}}) {
        const auto e = xlq::exceptional_poly(p, 0);
        const Poly xi1 = xlq::deforming_poly(p, 1);
        REQUIRE(e.in_x.degree() == 2 * p.ell);
        // e.in_x is monic; xi1 scaled monic must match coefficient-wise
        const double s = 1.0 / xi1.lead();
        for (int k = 0; k <= e.in_x.degree(); ++k) {
            CHECK(e.in_x.c[k] == Approx(s * xi1.c[k]).margin(1e-10));
        }
    }
}

TEST_CASE("frozen coefficients at (g, l, n) = (1, 2, 1)", "[exceptional]") {
    // independently derived: monic kernel is x^6 + 11/2 x^4 - 55/4 x^2 - 385/8
    const auto e = xlq::exceptional_poly({1.0, 2}, 1);
    REQUIRE(e.in_x.degree() == 6);
    CHECK(e.in_x.c[6] == Approx(1.0));
    CHECK(e.in_x.c[4] == Approx(11.0 / 2.0).margin(1e-10));
    CHECK(e.in_x.c[2] == Approx(-55.0 / 4.0).margin(1e-10));
    CHECK(e.in_x.c[0] == Approx(-385.0 / 8.0).margin(1e-10));
    CHECK(e.in_u.degree() == 3);
    CHECK(e.in_u(4.0) == Approx(e.in_x(2.0)).epsilon(1e-13));
}

TEST_CASE("degree, parity, kernel isolation across the grid", "[exceptional]") {
    for (const Params p : {Params{1.0, 1}, Params{2.5, 1}, Params{1.0, 2}, Params{3.0, 2},
                           Params{1.5, 3}}) {
        for (int n = 0; n <= 5; ++n) {
            const auto e = xlq::exceptional_poly(p, n);
            REQUIRE(e.in_x.degree() == 2 * (n + p.ell));
            for (int k = 1; k <= e.in_x.degree(); k += 2) CHECK(e.in_x.c[k] == 0.0);
            CHECK(e.in_x.lead() == Approx(1.0));
            CHECK(e.sigma_ratio > 1e6);
        }
    }
}

TEST_CASE("eigenfunction property via the local equation residual", "[exceptional]") {
    for (const Params p : {Params{1.0, 1}, Params{3.0, 2}}) {
        for (int n : {0, 1, 3, 5}) {
            const xlq::Wavefunction w{p, n, xlq::exceptional_poly(p, n).in_x,
                                      xlq::deforming_poly(p, 0)};
            for (double x : {0.41, 0.93, 1.57, 2.83}) {
                if (std::abs(w.P(x)) < 0.05 * w.P.max_abs_coeff()) continue;  // skip near nodes
                CHECK(std::abs(xlq::schrodinger_residual(w, x)) < 1e-7);
            }
        }
    }
}

TEST_CASE("invalid level rejected", "[exceptional]") {
    CHECK_THROWS_AS(xlq::exceptional_poly({1.0, 1}, -1), xlq::Error);
}
