#pragma once
// Independent cross-check solver: explicit first-order upwinding on the local
// sign of sigma(c,u), central second-order diffusion with coefficient nu/2,
// all N components advanced with the one shared advection speed.  The scheme
// is written in the nonconservative form the system actually has — sigma
// multiplies (u_j)_x as a coefficient.
//
// Time step: dt = min(cfl * dx / sup|sigma|, cfl * dx^2 / nu).  With
// cfl <= 1/2 the update is a convex combination, so the discrete maximum
// principle holds exactly.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "field.hpp"
#include "model.hpp"

namespace gburgers {

struct FDConfig {
    double x_min = -10.0, x_max = 10.0;
    int nx = 1001;
    double t_final = 1.0;
    double cfl_safety = 0.45;

    void validate() const {
        if (!(x_min < x_max)) throw std::invalid_argument("FDConfig: need x_min < x_max");
        if (nx < 3) throw std::invalid_argument("FDConfig: need nx >= 3");
        if (!(t_final > 0.0)) throw std::invalid_argument("FDConfig: need t_final > 0");
        if (!(cfl_safety > 0.0 && cfl_safety <= 1.0))
            throw std::invalid_argument("FDConfig: cfl_safety must be in (0, 1]");
    }
};

inline FieldSlice solve_fd(const ProblemSpec& spec, double nu, const FDConfig& cfg) {
    cfg.validate();
    if (!(nu > 0.0)) throw std::invalid_argument("solve_fd: need nu > 0");
    const std::size_t N = spec.components();
    const std::size_t nx = static_cast<std::size_t>(cfg.nx);
    const double dx = (cfg.x_max - cfg.x_min) / static_cast<double>(nx - 1);

    std::vector<double> x(nx);
    for (std::size_t i = 0; i < nx; ++i) x[i] = cfg.x_min + dx * static_cast<double>(i);

    std::vector<std::vector<double>> u(N, std::vector<double>(nx));
    for (std::size_t j = 0; j < N; ++j)
        for (std::size_t i = 0; i < nx; ++i) u[j][i] = spec.profiles[j](x[i]);
    const std::vector<std::vector<double>> u_init = u;

    // a-priori bound on |sigma| along the evolution: each component obeys its
    // own maximum principle, so |sigma| <= sum_k |c_k| sup|u_{0k}|
    double sigma_bound = 0.0;
    double data_range = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
        const double sup_k = spec.profiles[k].sup_abs();
        sigma_bound += std::abs(spec.c[k]) * sup_k;
        data_range = std::max(data_range, sup_k);
    }

    double dt_max = cfg.cfl_safety * dx * dx / nu;
    if (sigma_bound > 0.0) dt_max = std::min(dt_max, cfg.cfl_safety * dx / sigma_bound);
    const long nt = static_cast<long>(std::ceil(cfg.t_final / dt_max));
    const double dt = cfg.t_final / static_cast<double>(nt);
    const double lam = dt / dx;
    const double dif = nu * dt / (2.0 * dx * dx);

    std::vector<double> sig(nx);
    std::vector<std::vector<double>> next = u;
    for (long n = 0; n < nt; ++n) {
        for (std::size_t i = 0; i < nx; ++i) {
            double s = 0.0;
            for (std::size_t k = 0; k < N; ++k) s += spec.c[k] * u[k][i];
            sig[i] = s;
        }
        const double worst = *std::max_element(sig.begin(), sig.end(),
                                               [](double a, double b) { return std::abs(a) < std::abs(b); });
        if (std::abs(worst) > sigma_bound * (1.0 + 1e-12) + 1e-300) {
            std::ostringstream msg;
            msg << "solve_fd: advection speed " << worst << " exceeded the CFL bound "
                << sigma_bound << " at step " << n;
            throw std::runtime_error(msg.str());
        }
        for (std::size_t j = 0; j < N; ++j) {
            const std::vector<double>& uj = u[j];
            std::vector<double>& vj = next[j];
            for (std::size_t i = 1; i + 1 < nx; ++i) {
                const double upw = sig[i] >= 0.0 ? uj[i] - uj[i - 1] : uj[i + 1] - uj[i];
                vj[i] = uj[i] - lam * sig[i] * upw + dif * (uj[i + 1] - 2.0 * uj[i] + uj[i - 1]);
            }
            vj.front() = u_init[j].front();  // Dirichlet pinned to the data
            vj.back() = u_init[j].back();
        }
        std::swap(u, next);
    }

    // boundary contamination check: the edge of the computed field must not
    // have reached the domain ends
    const double drift_tol = 1e-6 * (1.0 + data_range);
    for (std::size_t j = 0; j < N; ++j) {
        for (std::size_t i : {std::size_t{1}, std::size_t{2}, nx - 3, nx - 2}) {
            if (std::abs(u[j][i] - u_init[j][i]) > drift_tol) {
                std::ostringstream msg;
                msg << "solve_fd: solution reached the domain boundary (component " << (j + 1)
                    << ", x=" << x[i] << " moved " << std::abs(u[j][i] - u_init[j][i])
                    << "); widen [x_min, x_max]";
                throw std::runtime_error(msg.str());
            }
        }
    }

    FieldSlice slice;
    slice.t = cfg.t_final;
    slice.x = std::move(x);
    slice.u = std::move(u);
    return slice;
}

// L-inf norm of the centered-difference residual of the scalar equation
//   sigma_t + (sigma^2/2)_x = (nu/2) sigma_xx
// over the interior of a uniformly-spaced history of slices.  Small residual
// certifies that sigma = c.u behaves as a single Burgers field.
inline double burgers_residual(const std::vector<FieldSlice>& history, const CoefficientVector& c,
                               double nu) {
    if (history.size() < 3) throw std::invalid_argument("burgers_residual: need >= 3 slices");
    const FieldSlice& first = history.front();
    first.check_consistent();
    const std::size_t nx = first.points();
    if (nx < 3) throw std::invalid_argument("burgers_residual: need >= 3 grid points");
    for (const FieldSlice& s : history) {
        if (s.x != first.x) throw std::invalid_argument("burgers_residual: slice grids differ");
        if (s.components() != c.size())
            throw std::invalid_argument("burgers_residual: component count mismatch");
    }
    const double dt = history[1].t - history[0].t;
    if (!(dt > 0.0)) throw std::invalid_argument("burgers_residual: slices not time-ordered");
    for (std::size_t n = 1; n + 1 < history.size(); ++n) {
        const double step = history[n + 1].t - history[n].t;
        if (std::abs(step - dt) > 1e-9 * dt)
            throw std::invalid_argument("burgers_residual: non-uniform time spacing");
    }
    const double dx = first.x[1] - first.x[0];

    std::vector<std::vector<double>> sig(history.size(), std::vector<double>(nx, 0.0));
    for (std::size_t n = 0; n < history.size(); ++n)
        for (std::size_t k = 0; k < c.size(); ++k)
            for (std::size_t i = 0; i < nx; ++i) sig[n][i] += c[k] * history[n].u[k][i];

    double worst = 0.0;
    for (std::size_t n = 1; n + 1 < history.size(); ++n) {
        const auto& sm = sig[n - 1];
        const auto& s0 = sig[n];
        const auto& sp = sig[n + 1];
        for (std::size_t i = 1; i + 1 < nx; ++i) {
            const double r = (sp[i] - sm[i]) / (2.0 * dt) +
                             (s0[i + 1] * s0[i + 1] - s0[i - 1] * s0[i - 1]) / (4.0 * dx) -
                             0.5 * nu * (s0[i + 1] - 2.0 * s0[i] + s0[i - 1]) / (dx * dx);
            worst = std::max(worst, std::abs(r));
        }
    }
    return worst;
}

}  // namespace gburgers
