#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gburgers/closedform.hpp"
#include "gburgers/inviscid.hpp"
#include "gburgers/model.hpp"

using namespace gburgers;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("data bundles validate and derive sigma") {
    CHECK_THROWS_AS(BoxData(-1.0, {1.0}, CoefficientVector({1.0})), std::invalid_argument);
    const BoxData bd(1.0, {1.0, -1.0}, CoefficientVector({2.0, 1.0}));
    CHECK(bd.sigma0 == 1.0);
    const RiemannData rd({1.0, 0.0}, {0.0, 3.0}, CoefficientVector({1.0, 1.0}));
    CHECK(rd.sigmaL == 1.0);
    CHECK(rd.sigmaR == 3.0);
}

TEST_CASE("A and B at sigma0 = 0 match the frozen reference") {
    const ABPair ab = ab_functions(1.0, 0.0, 1.0, 0.0, 1.0);
    CHECK_THAT(ab.A.value(), WithinRel(2.1089385292076491, 1e-14));
    // A + B integrates the full Gaussian: sqrt(2 t nu) * sqrt(pi)
    CHECK_THAT(ab.A.value() + ab.B.value(), WithinRel(2.5066282746310005, 1e-14));
    CHECK_THROWS_AS(ab_functions(1.0, 0.0, 0.0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("A stays finite where linear arithmetic overflows") {
    // prefactor exponent s0^2 t / 2 nu = 5e4; the log pair must absorb it
    const ABPair ab = ab_functions(1.0, 1.0, 1e-5, 0.0, 1.0);
    CHECK(std::isfinite(ab.A.log_mag));
    CHECK(ab.A.sign == 1);
    CHECK(ab.B.sign == 1);
    CHECK(ab.A.log_mag > ab.B.log_mag);  // B carries the +l shift, further out
}

TEST_CASE("small-nu asymptotic form tracks the exact A") {
    // one point per branch of the expansion: argument positive, negative, zero
    const double nu = 0.01, t = 1.0;
    for (double x : {-3.0, 3.0, 0.0}) {
        const ABPair exact = ab_functions(1.0, 1.0, nu, x, t);
        const ABPair asym = ab_small_nu(1.0, 1.0, nu, x, t);
        CHECK_THAT(asym.A.log_mag, WithinAbs(exact.A.log_mag, 1e-4));
        CHECK_THAT(asym.B.log_mag, WithinAbs(exact.B.log_mag, 1e-4));
    }
}

TEST_CASE("viscous box solution: frozen quadrature references") {
    const BoxData bd(1.0, {1.0}, CoefficientVector({1.0}));
    CHECK_THAT(viscous_box_solution(bd, 0.5, 0.0, 1.0)[0],
               WithinRel(0.69567086827635735, 1e-12));
    CHECK_THAT(viscous_box_solution(bd, 0.1, 0.0, 1.0)[0],
               WithinRel(0.81147339314829841, 1e-12));
}

TEST_CASE("viscous box solution at sigma0 = 0 is plain heat smoothing") {
    const BoxData bd(1.0, {1.0, -1.0}, CoefficientVector({1.0, 1.0}));
    REQUIRE(bd.sigma0 == 0.0);
    const double nu = 0.7, t = 2.0;
    const double s = std::sqrt(2.0 * nu * t);
    for (double x : {-2.0, 0.0, 0.9, 3.0}) {
        const auto u = viscous_box_solution(bd, nu, x, t);
        const double heat = 0.5 * (std::erf((1.0 - x) / s) - std::erf((-1.0 - x) / s));
        CHECK_THAT(u[0], WithinRel(heat, 1e-12));
        CHECK_THAT(u[1], WithinRel(-heat, 1e-12));
    }
}

TEST_CASE("viscous box solution survives tiny viscosity on a wide grid") {
    const BoxData bd(1.0, {1.0}, CoefficientVector({1.0}));
    for (double nu : {1e-2, 1e-3, 1e-6}) {
        for (double x = -5.0; x <= 5.0; x += 0.05) {
            const double u = viscous_box_solution(bd, nu, x, 1.0)[0];
            REQUIRE(std::isfinite(u));
            REQUIRE(u >= -1e-9);
            REQUIRE(u <= 1.0 + 1e-9);
        }
    }
    // sharp interior plateau and clean exterior zero at nu = 1e-4
    CHECK_THAT(viscous_box_solution(bd, 1e-4, 0.5, 1.0)[0], WithinAbs(1.0, 1e-6));
    CHECK_THAT(viscous_box_solution(bd, 1e-4, 3.0, 1.0)[0], WithinAbs(0.0, 1e-6));
}

TEST_CASE("inviscid box: fan, plateau, shock, and decay") {
    const BoxData bd(1.0, {1.0}, CoefficientVector({1.0}));
    // before breakdown (t* = 4): fan, plateau on [t-1, 1 + t/2), then zero
    CHECK(inviscid_box_solution(bd, -1.5, 2.0)[0] == 0.0);
    CHECK_THAT(inviscid_box_solution(bd, 0.0, 2.0)[0], WithinRel(0.5, 1e-15));
    CHECK(inviscid_box_solution(bd, 1.5, 2.0)[0] == 1.0);
    CHECK(inviscid_box_solution(bd, 2.0, 2.0)[0] == 0.0);  // right limit at the shock
    // after breakdown the shock follows -l + sqrt(4 l s0 t)
    CHECK_THAT(inviscid_box_solution(bd, 4.9, 9.0)[0], WithinRel(0.65555555555555556, 1e-14));
    CHECK(inviscid_box_solution(bd, 5.1, 9.0)[0] == 0.0);
    // sup decays like 2/sqrt(t) once the plateau is gone
    const double shock = -1.0 + std::sqrt(4.0 * 100.0);
    CHECK_THAT(inviscid_box_solution(bd, shock - 1e-9, 100.0)[0],
               WithinRel(2.0 / std::sqrt(100.0), 1e-6));
}

TEST_CASE("inviscid box with sigma0 = 0 is frozen in place") {
    const BoxData bd(1.0, {1.0, -1.0}, CoefficientVector({1.0, 1.0}));
    for (double t : {0.5, 7.0, 4000.0}) {
        CHECK(inviscid_box_solution(bd, 0.0, t) == std::vector<double>{1.0, -1.0});
        CHECK(inviscid_box_solution(bd, 1.5, t) == std::vector<double>{0.0, 0.0});
        CHECK(inviscid_box_solution(bd, -1.0, t) == std::vector<double>{1.0, -1.0});
        CHECK(inviscid_box_solution(bd, 1.0, t) == std::vector<double>{0.0, 0.0});
    }
}

TEST_CASE("negative sigma0 mirrors the positive case") {
    // cross-check against the independent variational evaluator at
    // continuity points
    const CoefficientVector c({1.0});
    const BoxData bd(1.0, {-1.0}, c);
    REQUIRE(bd.sigma0 == -1.0);
    const ProblemSpec spec = box_spec(c, {-1.0}, 1.0);
    const PotentialFunction P = build_potential(spec);
    for (double t : {2.0, 9.0}) {
        for (double x : {-4.6, -1.7, -0.4, 0.3, 0.9, 1.4}) {
            const double a = inviscid_box_solution(bd, x, t)[0];
            const double b = evaluate_inviscid(spec, P, x, t).u[0];
            CHECK_THAT(a, WithinAbs(b, 1e-12));
        }
    }
}

TEST_CASE("riemann closed form: shock, rarefaction, contact") {
    // shock: sigma drops 2 -> 0, speed 1
    const RiemannData shock({2.0, 5.0}, {0.0, 3.0}, CoefficientVector({1.0, 0.0}));
    CHECK(riemann_solution(shock, 0.9, 1.0) == std::vector<double>{2.0, 5.0});
    CHECK(riemann_solution(shock, 1.1, 1.0) == std::vector<double>{0.0, 3.0});
    CHECK(riemann_solution(shock, 1.0, 1.0) == std::vector<double>{1.0, 4.0});  // exact hit

    // rarefaction: sigma rises 0 -> 1, fan over [0, t]
    const RiemannData fan({0.0, 0.0}, {1.0, 0.0}, CoefficientVector({1.0, 1.0}));
    CHECK(riemann_solution(fan, -0.1, 2.0) == std::vector<double>{0.0, 0.0});
    CHECK_THAT(riemann_solution(fan, 1.0, 2.0)[0], WithinRel(0.5, 1e-15));
    CHECK(riemann_solution(fan, 2.0, 2.0) == std::vector<double>{1.0, 0.0});  // fan edge

    // contact: equal sigma on both sides, jump rides at sigma t
    const RiemannData contact({0.3, 0.2}, {0.1, 0.4}, CoefficientVector({1.0, 1.0}));
    REQUIRE(contact.sigmaL == contact.sigmaR);
    CHECK(riemann_solution(contact, 0.9, 2.0) == std::vector<double>{0.3, 0.2});
    CHECK(riemann_solution(contact, 1.0, 2.0) == std::vector<double>{0.1, 0.4});  // right limit
    CHECK(riemann_solution(contact, 1.1, 2.0) == std::vector<double>{0.1, 0.4});
}
