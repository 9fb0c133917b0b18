#pragma once
// Exact viscous solution by quadrature of the measure formula
//
//   u_j(x,t) = ( int u0j(y) e^{-phi(y)/nu} dy ) / ( int e^{-phi(y)/nu} dy ),
//   phi(y) = I(y) + (x-y)^2 / 2t.
//
// The raw exponentials underflow catastrophically for small nu, so both
// integrals are shifted by the exact global minimum of phi (from the
// variational minimizer) before exponentiating; the ratio is shift-invariant.
// Integration runs per smooth segment — splits forced at every knot of I and
// at every stationary point of phi — with adaptive Gauss–Kronrod inside.

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "field.hpp"
#include "inviscid.hpp"
#include "model.hpp"
#include "parallel.hpp"

namespace gburgers {

struct ViscousConfig {
    double nu = 0.1;
    double rel_tol = 1e-9;
    double truncation_sigmas = 12.0;  // window half-width beyond stationary points, in sqrt(nu t)
    int max_subdivisions = 15;

    void validate() const {
        if (!(nu > 0.0)) throw std::invalid_argument("ViscousConfig: need nu > 0");
        if (!(rel_tol > 0.0 && rel_tol <= 1e-3))
            throw std::invalid_argument("ViscousConfig: rel_tol must be in (0, 1e-3]");
        if (!(truncation_sigmas >= 6.0))
            throw std::invalid_argument("ViscousConfig: truncation_sigmas must be >= 6");
        if (max_subdivisions < 1)
            throw std::invalid_argument("ViscousConfig: max_subdivisions must be >= 1");
    }
};

struct WeightedSample {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Pointwise evaluation.  shift_offset perturbs the stabilization shift; the
// result is provably independent of it (kept as a knob so tests can say so).
inline std::vector<double> evaluate_viscous_point(const ProblemSpec& spec,
                                                  const PotentialFunction& P,
                                                  const ViscousConfig& cfg, double x, double t,
                                                  double shift_offset = 0.0) {
    cfg.validate();
    if (!(t > 0.0)) throw std::invalid_argument("evaluate_viscous: need t > 0");
    const double nu = cfg.nu;
    const double shift = minimize_variational(P, x, t).value + shift_offset;

    const std::vector<double> anchors = stationary_candidates(P, x, t);
    const double pad = cfg.truncation_sigmas * std::sqrt(nu * t);
    const double lo = anchors.front() - pad;
    const double hi = anchors.back() + pad;

    std::vector<double> cuts;
    cuts.push_back(lo);
    cuts.push_back(hi);
    for (double k : P.knots)
        if (k > lo && k < hi) cuts.push_back(k);
    for (double y : anchors)
        if (y > lo && y < hi) cuts.push_back(y);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    using quad = boost::math::quadrature::gauss_kronrod<double, 15>;
    const auto g0 = [&](double y) {
        const double d = x - y;
        return std::exp(-(P(y) + d * d / (2.0 * t) - shift) / nu);
    };

    double den = 0.0, den_err = 0.0;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        double e = 0.0;
        den += quad::integrate(g0, cuts[s], cuts[s + 1],
                               static_cast<unsigned>(cfg.max_subdivisions), cfg.rel_tol, &e);
        den_err += e;
    }
    if (!(den > 0.0) || !std::isfinite(den)) {
        std::ostringstream msg;
        msg << "evaluate_viscous: degenerate normalization at x=" << x << " t=" << t
            << " nu=" << nu;
        throw std::runtime_error(msg.str());
    }
    if (den_err > 100.0 * cfg.rel_tol * den) {
        std::ostringstream msg;
        msg << "evaluate_viscous: quadrature did not converge within " << cfg.max_subdivisions
            << " subdivisions at x=" << x << " t=" << t << " nu=" << nu
            << " (err " << den_err << " vs " << den << ")";
        throw std::runtime_error(msg.str());
    }

    std::vector<double> u(spec.components());
    for (std::size_t j = 0; j < u.size(); ++j) {
        const auto& prof = spec.profiles[j];
        const auto gj = [&](double y) { return prof(y) * g0(y); };
        double num = 0.0;
        for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
            double e = 0.0;
            num += quad::integrate(gj, cuts[s], cuts[s + 1],
                                   static_cast<unsigned>(cfg.max_subdivisions), cfg.rel_tol, &e);
        }
        u[j] = num / den;
    }
    return u;
}

inline std::vector<double> evaluate_viscous(const ProblemSpec& spec, const ViscousConfig& cfg,
                                            double x, double t) {
    const PotentialFunction P = build_potential(spec);
    return evaluate_viscous_point(spec, P, cfg, x, t);
}

inline FieldSlice evaluate_viscous_grid(const ProblemSpec& spec, const ViscousConfig& cfg,
                                        const std::vector<double>& xs, double t) {
    if (!std::is_sorted(xs.begin(), xs.end()))
        throw std::invalid_argument("evaluate_viscous_grid: grid must be sorted");
    const PotentialFunction P = build_potential(spec);
    FieldSlice slice;
    slice.t = t;
    slice.x = xs;
    slice.u.assign(spec.components(), std::vector<double>(xs.size(), 0.0));
    parallel_for(xs.size(), env_thread_count(), [&](std::size_t i) {
        const std::vector<double> v = evaluate_viscous_point(spec, P, cfg, xs[i], t);
        for (std::size_t j = 0; j < v.size(); ++j) slice.u[j][i] = v[j];
    });
    return slice;
}

// Discrete snapshot of the probability measure on user-chosen nodes.
inline WeightedSample measure_weights(const ProblemSpec& spec, const ViscousConfig& cfg, double x,
                                      double t, const std::vector<double>& nodes) {
    cfg.validate();
    if (!(t > 0.0)) throw std::invalid_argument("measure_weights: need t > 0");
    if (nodes.empty()) throw std::invalid_argument("measure_weights: need at least one node");
    if (!std::is_sorted(nodes.begin(), nodes.end()))
        throw std::invalid_argument("measure_weights: nodes must be sorted");
    const PotentialFunction P = build_potential(spec);

    std::vector<double> phis(nodes.size());
    double lowest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        phis[i] = phi(P, x, t, nodes[i]);
        lowest = std::min(lowest, phis[i]);
    }
    WeightedSample ws;
    ws.nodes = nodes;
    ws.weights.resize(nodes.size());
    double total = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        ws.weights[i] = std::exp(-(phis[i] - lowest) / cfg.nu);
        total += ws.weights[i];
    }
    // the shifted minimum contributes exp(0)=1, so total >= 1 always
    for (double& w : ws.weights) w /= total;
    return ws;
}

}  // namespace gburgers
