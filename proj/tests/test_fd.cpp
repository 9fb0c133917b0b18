#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gburgers/closedform.hpp"
#include "gburgers/fd.hpp"
#include "gburgers/model.hpp"
#include "gburgers/viscous.hpp"

using namespace gburgers;
using Catch::Matchers::WithinAbs;

namespace {

FieldSlice closed_form_slice(const BoxData& bd, double nu, const std::vector<double>& xs,
                             double t) {
    FieldSlice s;
    s.t = t;
    s.x = xs;
    s.u.assign(bd.u0.size(), std::vector<double>(xs.size(), 0.0));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const auto v = viscous_box_solution(bd, nu, xs[i], t);
        for (std::size_t j = 0; j < v.size(); ++j) s.u[j][i] = v[j];
    }
    return s;
}

}  // namespace

TEST_CASE("config validation") {
    FDConfig cfg;
    cfg.x_min = 1.0;
    cfg.x_max = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.x_min = -1.0;
    cfg.nx = 2;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.nx = 101;
    cfg.cfl_safety = 1.5;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.cfl_safety = 0.45;
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("pure diffusion matches the heat kernel answer") {
    // zero coupling: the scheme reduces to explicit central diffusion
    const ProblemSpec spec = box_spec(CoefficientVector({0.0}), {1.0}, 1.0);
    FDConfig cfg;
    cfg.x_min = -8.0;
    cfg.x_max = 8.0;
    cfg.nx = 801;
    cfg.t_final = 0.5;
    const double nu = 1.0;
    const FieldSlice fd = solve_fd(spec, nu, cfg);
    const double s = std::sqrt(2.0 * nu * cfg.t_final);
    double worst = 0.0;
    for (std::size_t i = 0; i < fd.x.size(); ++i) {
        const double exact =
            0.5 * (std::erf((1.0 - fd.x[i]) / s) - std::erf((-1.0 - fd.x[i]) / s));
        worst = std::max(worst, std::abs(fd.u[0][i] - exact));
    }
    // error is dominated by sampling the data jump onto the grid, O(dx)
    CHECK(worst < 8e-3);
}

TEST_CASE("refinement shrinks the gap against the exact solution") {
    const ProblemSpec spec = box_spec(CoefficientVector({1.0}), {1.0}, 1.0);
    const BoxData bd(1.0, {1.0}, CoefficientVector({1.0}));
    const double nu = 0.2, t = 0.5;
    auto gap_at = [&](int nx) {
        FDConfig cfg;
        cfg.x_min = -10.0;
        cfg.x_max = 10.0;
        cfg.nx = nx;
        cfg.t_final = t;
        const FieldSlice fd = solve_fd(spec, nu, cfg);
        double g = 0.0;
        for (std::size_t i = 0; i < fd.x.size(); ++i)
            g = std::max(g, std::abs(fd.u[0][i] - viscous_box_solution(bd, nu, fd.x[i], t)[0]));
        return g;
    };
    const double coarse = gap_at(501);
    const double fine = gap_at(1001);
    CHECK(fine < coarse);
    CHECK(fine < 0.05);
}

TEST_CASE("boundary contamination raises instead of silently polluting") {
    // the domain is far too small for t = 2; the plateau hits the wall
    const ProblemSpec spec = box_spec(CoefficientVector({1.0}), {1.0}, 1.0);
    FDConfig cfg;
    cfg.x_min = -2.0;
    cfg.x_max = 2.0;
    cfg.nx = 401;
    cfg.t_final = 2.0;
    CHECK_THROWS_WITH(solve_fd(spec, 0.5, cfg), Catch::Matchers::ContainsSubstring("boundary"));
}

TEST_CASE("residual certifies an exact solution history and flags a corrupt one") {
    const BoxData bd(1.0, {1.0}, CoefficientVector({1.0}));
    const double nu = 0.4, t0 = 0.5, dt = 2e-3;
    std::vector<double> xs;
    for (int i = 0; i <= 600; ++i) xs.push_back(-6.0 + 0.02 * i);

    std::vector<FieldSlice> hist;
    for (double t : {t0 - dt, t0, t0 + dt}) hist.push_back(closed_form_slice(bd, nu, xs, t));
    const double clean = burgers_residual(hist, bd.c, nu);
    CHECK(clean < 5e-3);  // centered truncation error only

    std::vector<FieldSlice> bad = hist;
    for (std::size_t i = 0; i < xs.size(); ++i)
        bad[1].u[0][i] += 5e-3 * std::sin(5.0 * xs[i]);
    const double corrupt = burgers_residual(bad, bd.c, nu);
    CHECK(corrupt > 3.0 * clean);
}

TEST_CASE("residual input validation") {
    const BoxData bd(1.0, {1.0}, CoefficientVector({1.0}));
    std::vector<double> xs = {-1.0, 0.0, 1.0, 2.0};
    std::vector<FieldSlice> two = {closed_form_slice(bd, 0.5, xs, 0.5),
                                   closed_form_slice(bd, 0.5, xs, 0.6)};
    CHECK_THROWS_AS(burgers_residual(two, bd.c, 0.5), std::invalid_argument);

    std::vector<FieldSlice> uneven = {closed_form_slice(bd, 0.5, xs, 0.5),
                                      closed_form_slice(bd, 0.5, xs, 0.6),
                                      closed_form_slice(bd, 0.5, xs, 0.9)};
    CHECK_THROWS_AS(burgers_residual(uneven, bd.c, 0.5), std::invalid_argument);

    std::vector<FieldSlice> mixed = {closed_form_slice(bd, 0.5, xs, 0.5),
                                     closed_form_slice(bd, 0.5, {-1.0, 0.5, 1.0, 2.0}, 0.6),
                                     closed_form_slice(bd, 0.5, xs, 0.7)};
    CHECK_THROWS_AS(burgers_residual(mixed, bd.c, 0.5), std::invalid_argument);
}

TEST_CASE("multi component runs advance all fields") {
    const ProblemSpec spec = box_spec(CoefficientVector({1.0, 1.0}), {1.0, -1.0}, 1.0);
    FDConfig cfg;
    cfg.x_min = -6.0;
    cfg.x_max = 6.0;
    cfg.nx = 301;
    cfg.t_final = 0.3;
    const FieldSlice fd = solve_fd(spec, 0.5, cfg);
    REQUIRE(fd.components() == 2);
    // sigma stays identically zero, so the two components remain mirrors
    for (std::size_t i = 0; i < fd.x.size(); ++i)
        CHECK_THAT(fd.u[0][i] + fd.u[1][i], WithinAbs(0.0, 1e-12));
}
