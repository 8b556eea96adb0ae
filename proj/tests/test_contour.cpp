#include <catch2/catch_amalgamated.hpp>

#include "xlq/contour.hpp"
#include "xlq/qmf.hpp"
#include "xlq/swkb.hpp"

using Catch::Approx;
using xlq::cplx;
using xlq::Params;

TEST_CASE("branch field geometry at (g, l, E) = (1, 1, 4)", "[contour]") {
    const auto f = xlq::make_branch_field({1.0, 1}, 4.0);
    CHECK(f.x1 == Approx(0.685075518911).margin(1e-9));
    CHECK(f.x2 == Approx(2.68204458799).margin(1e-9));
    REQUIRE(f.cuts.size() == 6);  // [x1,x2], its mirror, and two conjugate pairs
    CHECK(f.lead_Q < 0.0);
    CHECK(f.pairing_margin > 1.01);
    REQUIRE(f.poles_xi0.size() == 2);
    REQUIRE(f.poles_xi1.size() == 2);
    for (cplx q : f.poles_xi0) CHECK(q.real() == 0.0);  // purely imaginary
    for (cplx q : f.poles_xi1) CHECK(q.real() == 0.0);
}

TEST_CASE("sign convention across the classical segment", "[contour]") {
    const Params p{1.0, 1};
    const double E = 4.0;
    const auto f = xlq::make_branch_field(p, E);
    const xlq::Rational W = xlq::superpotential(p);
    const double xm = 0.5 * (f.x1 + f.x2);
    const double classical = std::sqrt(E - W(xm) * W(xm));
    // approached from below: +sqrt; on-axis evaluation (+0.0 imaginary part)
    // lands on the other side of the cut and yields -sqrt
    CHECK(f(cplx(xm, -1e-9)).real() == Approx(classical).margin(1e-6));
    CHECK(f(cplx(xm, 0.0)).real() == Approx(-classical).margin(1e-6));
    CHECK(std::abs(f(cplx(xm, 1e-9)).real() + classical) < 1e-6);
}

TEST_CASE("stadium around the classical segment equals the line integral", "[contour]") {
    const Params p{1.0, 1};
    const auto f = xlq::make_branch_field(p, 4.0);
    const double I_C =
        (xlq::stadium_integral(f, f.cuts[0], xlq::stadium_height(f, 0)) / (2.0 * M_PI)).real();
    CHECK(I_C == Approx(0.99767360321738006).margin(1e-10));
    CHECK(I_C == Approx(xlq::swkb_integral(p, 4.0)).margin(1e-11));
}

TEST_CASE("full decomposition ledger at (1, 1, 4)", "[contour]") {
    const auto L = xlq::contour_ledger(Params{1.0, 1}, 4.0);
    const double gl = 2.0;

    CHECK(L.I_C == Approx(0.99767360321738006).margin(1e-10));
    CHECK(L.I_C2 == Approx(L.I_C).margin(1e-10));  // mirror symmetry

    CHECK(std::abs(L.res_origin - cplx(0.0, -gl)) < 1e-10);
    REQUIRE(L.res_xi0.size() == 2);
    REQUIRE(L.res_xi1.size() == 2);
    for (cplx r : L.res_xi0) CHECK(std::abs(r - cplx(0.0, 1.0)) < 1e-10);
    for (cplx r : L.res_xi1) CHECK(std::abs(r - cplx(0.0, -1.0)) < 1e-10);

    const cplx expected_inf(0.0, L.E / 2.0 + gl);
    CHECK(std::abs(L.res_infinity_circle - expected_inf) < 1e-10);
    CHECK(std::abs(L.res_infinity_series - L.res_infinity_circle) < 1e-10);

    REQUIRE(L.omega.size() == 4);
    for (cplx w : L.omega) {
        CHECK(w.real() == Approx(0.0011631983913).margin(1e-9));
        CHECK(std::abs(w.imag()) == Approx(0.1281575374431).margin(1e-9));
    }
    CHECK(L.omega_sum == Approx(0.0046527935652404245).margin(1e-10));

    CHECK(L.closure_defect < 1e-10);
    CHECK(L.cluster_defect < 1e-9);
    CHECK(L.reconstructed_index == Approx(1.0).margin(1e-10));
}

TEST_CASE("ledger closes at a deeper level and wider deformation", "[contour]") {
    const auto L = xlq::contour_ledger(Params{3.0, 2}, 12.0);
    REQUIRE(L.omega.size() == 8);  // 4l off-axis cuts
    CHECK(L.closure_defect < 1e-9);
    CHECK(L.cluster_defect < 1e-8);
    CHECK(L.reconstructed_index == Approx(3.0).margin(1e-9));
    // off-axis total is small but decisively nonzero at this eigenvalue
    CHECK(std::abs(L.omega_sum) > 1e-5);
    CHECK(std::abs(L.omega_sum) < 1e-2);
}

TEST_CASE("field and momentum-function residues are i-rotations of each other", "[contour]") {
    const Params p{1.0, 1};
    const auto f = xlq::make_branch_field(p, 4.0);   // E = 4  <->  n = 1
    const auto m = xlq::momentum_function(p, 1);
    const cplx mi(0.0, -1.0);
    CHECK(std::abs(xlq::residue_measured(f, cplx(0.0)) -
                   mi * xlq::qmf_residue_measured(m, cplx(0.0))) < 1e-10);
    for (cplx z : f.poles_xi0) {
        CHECK(std::abs(xlq::residue_measured(f, z) - mi * xlq::qmf_residue_measured(m, z)) <
              1e-10);
    }
    // at the ground state the moving poles coincide with the xi1 zeros
    const auto m0 = xlq::momentum_function(p, 0);
    for (cplx z : f.poles_xi1) {
        CHECK(std::abs(xlq::residue_measured(f, z) - mi * xlq::qmf_residue_measured(m0, z)) <
              1e-10);
    }
}

TEST_CASE("crossing a cut is detected", "[contour]") {
    const auto f = xlq::make_branch_field({1.0, 1}, 4.0);
    std::vector<cplx> path;
    for (int k = 0; k < 64; ++k) {  // circle straddling the [x1, x2] cut
        const double th = 2.0 * M_PI * (k + 0.5) / 64;
        path.push_back(cplx(f.x1 + 0.02, 0.0) + std::polar(0.05, th));
    }
    CHECK_THROWS_AS(xlq::validate_phase_continuity(f, path), xlq::BranchJumpError);
}

TEST_CASE("direct and measured pole residues agree", "[contour]") {
    const auto f = xlq::make_branch_field({2.5, 1}, 8.0);
    for (cplx z : f.poles_xi0)
        CHECK(std::abs(f.residue_direct(z) - xlq::residue_measured(f, z)) < 1e-10);
    for (cplx z : f.poles_xi1)
        CHECK(std::abs(f.residue_direct(z) - xlq::residue_measured(f, z)) < 1e-10);
}

TEST_CASE("energies at or below zero are rejected", "[contour]") {
    CHECK_THROWS_AS(xlq::make_branch_field({1.0, 1}, -1.0), xlq::TurningPointError);
}
