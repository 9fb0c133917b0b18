#pragma once
// Vanishing-viscosity solution: minimize phi(y) = I(y) + (x-y)^2/(2t) and
// read the data off at the minimizer, u_j(x,t) = u_{0j}(y(x,t)).
//
// phi is piecewise quadratic on the knot partition of I, so the global
// minimum is found by exact enumeration: per-piece vertex (when the piece is
// convex) clamped to the piece, plus every knot.  No iteration, no local
// traps.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "field.hpp"
#include "model.hpp"
#include "parallel.hpp"

namespace gburgers {

struct MinimizerResult {
    double y_star = 0.0;   // reporting convention: the smallest minimizer
    double value = 0.0;    // phi at the minimum
    bool unique = true;
    double y_left = 0.0;   // extreme minimizers when not unique
    double y_right = 0.0;
    double tie_tol = 0.0;
};

inline double phi(const PotentialFunction& P, double x, double t, double y) {
    if (!(t > 0.0)) throw std::invalid_argument("phi: need t > 0");
    const double d = x - y;
    return P(y) + d * d / (2.0 * t);
}

// candidate minimizer positions of phi(., x, t): clamped per-piece vertices
// plus all knots.  Also the integration anchors for the viscous quadrature.
inline std::vector<double> stationary_candidates(const PotentialFunction& P, double x, double t) {
    std::vector<double> ys;
    if (P.knots.empty()) {
        ys.push_back(x - t * P.left_sigma);
        return ys;
    }
    ys.reserve(P.knots.size() * 2 + 2);
    // tails: phi' = sigma_tail - (x-y)/t, vertex y = x - t*sigma_tail
    ys.push_back(std::min(x - t * P.left_sigma, P.knots.front()));
    ys.push_back(std::max(x - t * P.right_sigma, P.knots.back()));
    for (double k : P.knots) ys.push_back(k);
    for (std::size_t i = 0; i + 1 < P.knots.size(); ++i) {
        // piece i: sigma(y) = v + s*(y-k_i); phi' = sigma(y) - (x-y)/t
        const double s = P.sig_slopes[i];
        const double quad = s + 1.0 / t;  // phi'' on the piece
        if (quad > 0.0) {
            const double v = P.sig_values[i];
            const double y_v = (x / t - v + s * P.knots[i]) / quad;
            if (y_v > P.knots[i] && y_v < P.knots[i + 1]) ys.push_back(y_v);
        }
        // concave or flat pieces bottom out at knots, already listed
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    return ys;
}

inline MinimizerResult minimize_variational(const PotentialFunction& P, double x, double t,
                                            double tie_tol = 1e-10) {
    if (!(t > 0.0)) throw std::invalid_argument("minimize_variational: need t > 0");
    const std::vector<double> ys = stationary_candidates(P, x, t);
    constexpr double inf = std::numeric_limits<double>::infinity();
    double best = inf;
    for (double y : ys) best = std::min(best, phi(P, x, t, y));

    const double cut = best + tie_tol * (1.0 + std::abs(best));
    double y_lo = inf, y_hi = -inf;
    for (double y : ys) {
        if (phi(P, x, t, y) <= cut) {
            y_lo = std::min(y_lo, y);
            y_hi = std::max(y_hi, y);
        }
    }
    MinimizerResult r;
    r.value = best;
    r.tie_tol = tie_tol;
    r.y_left = y_lo;
    r.y_right = y_hi;
    r.y_star = y_lo;
    r.unique = (y_hi - y_lo) <= 1e-12 * (1.0 + std::abs(y_lo));
    if (r.unique) r.y_right = r.y_left;
    return r;
}

enum class MinimizerSide { left, right, auto_pick };

// One evaluated point, with the advisory outputs the formula alone can't carry.
struct InviscidValue {
    std::vector<double> u;
    bool nonunique = false;
    MinimizerResult minimizer;
};

namespace detail {

// u_{0j}(y_star), except inside a rarefaction fan rooted at a data jump:
// there sigma jumps up across y_star and the self-similar value interpolates
// affinely in s = (x - y_star)/t between the one-sided states.
inline std::vector<double> data_at_minimizer(const ProblemSpec& spec, double x, double t, double y) {
    const double sig_minus = spec.sigma_profile.left_limit(y);
    const double sig_plus = spec.sigma_profile(y);
    const double jump = sig_plus - sig_minus;
    std::vector<double> u(spec.components());
    if (jump > 1e-14 * (1.0 + std::abs(sig_plus) + std::abs(sig_minus))) {
        const double s = (x - y) / t;
        double theta = (s - sig_minus) / jump;
        theta = std::clamp(theta, 0.0, 1.0);
        for (std::size_t j = 0; j < u.size(); ++j) {
            const double um = spec.profiles[j].left_limit(y);
            const double up = spec.profiles[j](y);
            u[j] = um + (up - um) * theta;
        }
        return u;
    }
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = spec.profiles[j](y);
    return u;
}

}  // namespace detail

inline InviscidValue evaluate_inviscid(const ProblemSpec& spec, const PotentialFunction& P, double x,
                                       double t, MinimizerSide side = MinimizerSide::auto_pick) {
    InviscidValue out;
    out.minimizer = minimize_variational(P, x, t);
    out.nonunique = !out.minimizer.unique;
    const double y = side == MinimizerSide::right ? out.minimizer.y_right : out.minimizer.y_left;
    out.u = detail::data_at_minimizer(spec, x, t, y);
    return out;
}

inline FieldSlice evaluate_inviscid_grid(const ProblemSpec& spec, const PotentialFunction& P,
                                         const std::vector<double>& xs, double t,
                                         MinimizerSide side = MinimizerSide::auto_pick) {
    FieldSlice slice;
    slice.t = t;
    slice.x = xs;
    slice.u.assign(spec.components(), std::vector<double>(xs.size(), 0.0));
    slice.nonunique.assign(xs.size(), 0);
    parallel_for(xs.size(), env_thread_count(), [&](std::size_t i) {
        const InviscidValue v = evaluate_inviscid(spec, P, xs[i], t, side);
        for (std::size_t j = 0; j < v.u.size(); ++j) slice.u[j][i] = v.u[j];
        slice.nonunique[i] = v.nonunique ? 1 : 0;
    });
    return slice;
}

}  // namespace gburgers
