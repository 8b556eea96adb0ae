#include <catch2/catch_amalgamated.hpp>

#include "xlq/hamiltonian.hpp"

using Catch::Approx;
using xlq::Params;
using xlq::Rational;

TEST_CASE("superpotential frozen point values", "[hamiltonian]") {
    // (g, l) = (1, 1): W(1.3) = -763491/17375930
    CHECK(xlq::superpotential({1.0, 1})(1.3) ==
          Approx(-763491.0 / 17375930.0).epsilon(1e-14));
    // (g, l) = (5/2, 1)
    CHECK(xlq::superpotential({2.5, 1})(0.9) == Approx(-2.890668318227373).epsilon(1e-13));
}

TEST_CASE("potential frozen point values", "[hamiltonian]") {
    CHECK(xlq::potential({1.0, 1})(0.9) == Approx(-2.238095883593719).epsilon(1e-13));
    CHECK(xlq::potential({2.5, 1})(0.9) == Approx(3.0090012622000555).epsilon(1e-13));
}

TEST_CASE("undeformed limit l = 0", "[hamiltonian]") {
    const Params p{1.7, 0};
    const Rational W = xlq::superpotential(p);
    for (double x : {0.4, 1.0, 2.3}) {
        CHECK(W(x) == Approx(x - 1.7 / x).epsilon(1e-14));
        // V = W^2 - W' = x^2 + g(g-1)/x^2 - (2g + 1)
        CHECK(xlq::potential(p)(x) ==
              Approx(x * x + 1.7 * 0.7 / (x * x) - 2.0 * 1.7 - 1.0).epsilon(1e-13));
    }
}

TEST_CASE("three potential constructions agree at coefficient level", "[hamiltonian]") {
    for (const Params p : {Params{1.0, 1}, Params{2.5, 1}, Params{1.0, 2}, Params{3.0, 2},
                           Params{1.5, 3}}) {
        const Rational direct = xlq::potential(p);
        const Rational gauge = xlq::potential_gauge_form(p);
        const Rational closed = xlq::potential_closed_form(p);
        CHECK(xlq::rational_mismatch(direct, gauge) < 1e-12);
        CHECK(xlq::rational_mismatch(direct, closed) < 1e-12);
        CHECK(xlq::rational_mismatch(gauge, closed) < 1e-12);
    }
}

TEST_CASE("curvature identity of the shifted deforming polynomial", "[hamiltonian]") {
    for (const Params p : {Params{1.0, 1}, Params{3.0, 2}, Params{1.5, 3}}) {
        for (double x : {0.3, 0.9, 1.7, 3.2}) {
            CHECK(xlq::curvature_identity_residual(p, x) < 1e-15);
        }
    }
}

TEST_CASE("index-shift identity xi0' = 2x (xi1 - xi0)", "[hamiltonian]") {
    for (const Params p : {Params{1.0, 1}, Params{2.5, 1}, Params{1.0, 2}, Params{3.0, 2},
                           Params{1.5, 3}}) {
        CHECK(xlq::shift_identity_residual(p) < 1e-14);
    }
}

TEST_CASE("superpotential recovered from the ground state", "[hamiltonian]") {
    for (const Params p : {Params{1.0, 1}, Params{3.0, 2}, Params{1.5, 3}}) {
        const Rational W = xlq::superpotential(p);
        for (double x : {0.45, 0.8, 1.7, 2.6}) {
            CHECK(xlq::superpotential_from_ground_state(p, x) == Approx(W(x)).margin(1e-12));
        }
    }
}

TEST_CASE("evaluation at the origin pole throws", "[hamiltonian]") {
    CHECK_THROWS_AS(xlq::superpotential({1.0, 1})(0.0), xlq::PolePointError);
}
