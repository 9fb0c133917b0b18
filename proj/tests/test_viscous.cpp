#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>

#include "gburgers/closedform.hpp"
#include "gburgers/model.hpp"
#include "gburgers/viscous.hpp"

using namespace gburgers;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("config validation") {
    ViscousConfig cfg;
    cfg.nu = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.nu = 0.5;
    cfg.rel_tol = 1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.rel_tol = 1e-9;
    cfg.truncation_sigmas = 2.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.truncation_sigmas = 12.0;
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("zero sigma reduces to plain heat evolution of the data") {
    // with all coupling coefficients zero the measure is the Gaussian
    // N(x, nu t), so the box average is a pair of normal CDFs
    const ProblemSpec spec = box_spec(CoefficientVector({0.0}), {1.0}, 1.0);
    ViscousConfig cfg;
    cfg.nu = 1.0;
    const double t = 1.0;
    // frozen: erf(1/sqrt(2)) = P(|Z| < 1)
    CHECK_THAT(evaluate_viscous(spec, cfg, 0.0, t)[0], WithinRel(0.68268949213708585, 1e-9));
    auto cdf_gap = [&](double x) {
        const double s = std::sqrt(2.0 * cfg.nu * t);
        return 0.5 * (std::erf((1.0 - x) / s) - std::erf((-1.0 - x) / s));
    };
    for (double x : {-2.0, -0.5, 0.7, 3.0})
        CHECK_THAT(evaluate_viscous(spec, cfg, x, t)[0], WithinRel(cdf_gap(x), 1e-8));
}

TEST_CASE("quadrature reproduces the closed-form box solution") {
    const CoefficientVector c({1.0});
    const ProblemSpec spec = box_spec(c, {1.0}, 1.0);
    const BoxData bd(1.0, {1.0}, c);

    // frozen 50-digit quadrature references
    ViscousConfig cfg;
    cfg.nu = 0.5;
    CHECK_THAT(evaluate_viscous(spec, cfg, 0.0, 1.0)[0],
               WithinRel(0.69567086827635735, 1e-11));
    cfg.nu = 0.1;
    CHECK_THAT(evaluate_viscous(spec, cfg, 0.0, 1.0)[0],
               WithinRel(0.81147339314829841, 1e-11));

    for (double nu : {1.0, 0.25}) {
        cfg.nu = nu;
        for (double x : {-2.0, -1.0, 0.0, 1.0, 2.0})
            CHECK_THAT(evaluate_viscous(spec, cfg, x, 2.0)[0],
                       WithinRel(viscous_box_solution(bd, nu, x, 2.0)[0], 1e-8));
    }
}

TEST_CASE("components share one measure") {
    // u2 = -u1 initially, and the formula keeps them locked forever
    const ProblemSpec spec = box_spec(CoefficientVector({1.0, 1.0}), {1.0, -1.0}, 1.0);
    ViscousConfig cfg;
    cfg.nu = 0.3;
    for (double x : {-1.5, 0.0, 0.8}) {
        const auto u = evaluate_viscous(spec, cfg, x, 0.7);
        CHECK_THAT(u[0] + u[1], WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("stabilization shift does not change the answer") {
    const ProblemSpec spec = box_spec(CoefficientVector({1.0}), {1.0}, 1.0);
    const PotentialFunction P = build_potential(spec);
    ViscousConfig cfg;
    cfg.nu = 0.5;
    const auto a = evaluate_viscous_point(spec, P, cfg, 0.3, 1.0, 0.0);
    const auto b = evaluate_viscous_point(spec, P, cfg, 0.3, 1.0, 2.0 * cfg.nu);
    CHECK_THAT(a[0], WithinAbs(b[0], 1e-10));
}

TEST_CASE("measure weights are a normalized positive sample") {
    const ProblemSpec spec = box_spec(CoefficientVector({0.0}), {1.0}, 1.0);
    ViscousConfig cfg;
    cfg.nu = 1.0;
    // two nodes at 0 and 1 under the Gaussian centered at x=0:
    // weights 1/(1+e^{-1/2}) and e^{-1/2}/(1+e^{-1/2})
    const WeightedSample ws = measure_weights(spec, cfg, 0.0, 1.0, {0.0, 1.0});
    REQUIRE(ws.weights.size() == 2);
    CHECK_THAT(ws.weights[0], WithinRel(0.62245933120185459, 1e-12));
    CHECK_THAT(ws.weights[1], WithinRel(0.37754066879814541, 1e-12));
    CHECK_THAT(ws.weights[0] + ws.weights[1], WithinAbs(1.0, 1e-15));
    CHECK_THROWS_AS(measure_weights(spec, cfg, 0.0, 1.0, {1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("grid evaluation validates ordering and is thread invariant") {
    const ProblemSpec spec = box_spec(CoefficientVector({1.0}), {1.0}, 1.0);
    ViscousConfig cfg;
    cfg.nu = 0.4;
    std::vector<double> xs;
    for (int i = 0; i <= 80; ++i) xs.push_back(-4.0 + 0.1 * i);

    setenv("GBURGERS_THREADS", "1", 1);
    const FieldSlice serial = evaluate_viscous_grid(spec, cfg, xs, 1.5);
    setenv("GBURGERS_THREADS", "4", 1);
    const FieldSlice parallel = evaluate_viscous_grid(spec, cfg, xs, 1.5);
    setenv("GBURGERS_THREADS", "1", 1);
    REQUIRE(serial.u[0].size() == parallel.u[0].size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        CHECK(serial.u[0][i] == parallel.u[0][i]);  // bitwise, not approximately

    std::vector<double> bad = {1.0, 0.0};
    CHECK_THROWS_AS(evaluate_viscous_grid(spec, cfg, bad, 1.0), std::invalid_argument);
}

TEST_CASE("time must be positive") {
    const ProblemSpec spec = box_spec(CoefficientVector({1.0}), {1.0}, 1.0);
    ViscousConfig cfg;
    cfg.nu = 0.5;
    CHECK_THROWS_AS(evaluate_viscous(spec, cfg, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_viscous(spec, cfg, 0.0, -1.0), std::invalid_argument);
}
