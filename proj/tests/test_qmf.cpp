#include <catch2/catch_amalgamated.hpp>

#include "xlq/qmf.hpp"

using Catch::Approx;
using xlq::cplx;
using xlq::Params;

TEST_CASE("Riccati equation is satisfied identically", "[qmf]") {
    for (const Params p : {Params{1.0, 1}, Params{3.0, 2}}) {
        for (int n : {0, 1, 3}) {
            const auto m = xlq::momentum_function(p, n);
            int kept = 0;
            for (double x : {0.47, 0.91, 1.63, 2.71, 3.9}) {
                try {
                    const double r = xlq::riccati_residual(m, x);
                    ++kept;
                    CHECK(r < 1e-12);
                } catch (const xlq::PolePointError&) {
                    // sample sits on a node of the state polynomial; skip
                }
            }
            CHECK(kept >= 3);
        }
    }
}

TEST_CASE("pole census encodes the quantum number", "[qmf]") {
    for (const Params p : {Params{1.0, 1}, Params{2.5, 1}, Params{1.0, 2}, Params{3.0, 2},
                           Params{1.5, 3}}) {
        for (int n = 0; n <= 5; ++n) {
            const auto c = xlq::singularity_census(xlq::momentum_function(p, n));
            CHECK(c.moving_real_positive == n);
            CHECK(c.moving_real_negative == n);
            CHECK(c.moving_off_axis == 2 * p.ell);
            CHECK(c.fixed_total == 2 * p.ell);
            CHECK(c.fixed_max_abs_real < 1e-10);
        }
    }
}

TEST_CASE("measured residues: origin, fixed, moving", "[qmf]") {
    const Params p{1.0, 1};
    const auto m = xlq::momentum_function(p, 2);
    const double gl = p.g + p.ell;
    CHECK(std::abs(xlq::qmf_residue_measured(m, cplx(0.0)) - cplx(gl)) < 1e-10);
    for (cplx z : m.fixed_poles())
        CHECK(std::abs(xlq::qmf_residue_measured(m, z) - cplx(-1.0)) < 1e-10);
    for (cplx z : m.moving_poles())
        CHECK(std::abs(xlq::qmf_residue_measured(m, z) - cplx(1.0)) < 1e-10);
}

TEST_CASE("ground state: moving poles sit on the shifted polynomial zeros", "[qmf]") {
    const Params p{1.0, 1};
    const auto m = xlq::momentum_function(p, 0);
    const auto mv = m.moving_poles();
    // xi_1 = x^2 + 5/2, so the only wavefunction zeros are +-i sqrt(5/2)
    REQUIRE(mv.size() == 2);
    CHECK(mv[0].real() == 0.0);
    CHECK(std::abs(mv[0].imag()) == Approx(std::sqrt(2.5)).epsilon(1e-12));
    CHECK(std::abs(xlq::qmf_residue_measured(m, mv[0]) - cplx(1.0)) < 1e-10);
}

TEST_CASE("global residue balance counts the level", "[qmf]") {
    for (const Params p : {Params{1.0, 1}, Params{1.0, 2}, Params{1.5, 3}}) {
        for (int n : {0, 1, 2, 5}) {
            const auto m = xlq::momentum_function(p, n);
            CHECK(xlq::quantization_index(m) == Approx(double(n)).margin(1e-8));
        }
    }
}
