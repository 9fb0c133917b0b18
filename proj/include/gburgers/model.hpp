#pragma once
// Problem data for the coupled system
//   (u_j)_t + sigma(c,u) (u_j)_x = (nu/2) (u_j)_xx,   sigma(c,u) = sum_k c_k u_k,
// j = 1..N.  All components ride on the single advection speed sigma, which is
// what makes the explicit solution formulas downstream possible.
//
// Initial data is piecewise affine with constant tails, so the potential
// I(y) = int_0^y sigma(c,u0(z)) dz is an exact piecewise quadratic.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gburgers {

inline bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

// Coupling coefficients c_1..c_N.
struct CoefficientVector {
    std::vector<double> c;

    CoefficientVector() = default;
    explicit CoefficientVector(std::vector<double> entries) : c(std::move(entries)) {
        if (c.empty()) throw std::invalid_argument("CoefficientVector: need N >= 1 entries");
        if (!all_finite(c)) throw std::invalid_argument("CoefficientVector: non-finite entry");
    }
    std::size_t size() const { return c.size(); }
    double operator[](std::size_t k) const { return c[k]; }
};

// sigma(c,u) = <c,u>
inline double sigma(const CoefficientVector& c, const std::vector<double>& u) {
    if (u.size() != c.size()) throw std::invalid_argument("sigma: dimension mismatch");
    double s = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) s += c[k] * u[k];
    return s;
}

// Piecewise-affine scalar profile with constant tails.
//
//   (-inf, b_0)        : left_tail
//   [b_i, b_{i+1})     : values[i] + slopes[i]*(y - b_i),   i = 0..m-2
//   [b_{m-1}, +inf)    : right_tail
//
// m = 0 means a global constant (left_tail == right_tail).  m = 1 is a plain
// step (Riemann data).  Value at a breakpoint is the right-limit, by
// convention; the solution formulas never see values on null sets anyway.
struct PiecewiseProfile {
    std::vector<double> breakpoints;
    std::vector<double> values;  // size max(m-1, 0)
    std::vector<double> slopes;  // same size as values
    double left_tail = 0.0;
    double right_tail = 0.0;

    static PiecewiseProfile constant(double v) {
        PiecewiseProfile p;
        p.left_tail = p.right_tail = v;
        return p;
    }

    void validate() const {
        const std::size_t m = breakpoints.size();
        if (!all_finite(breakpoints) || !all_finite(values) || !all_finite(slopes) ||
            !std::isfinite(left_tail) || !std::isfinite(right_tail))
            throw std::invalid_argument("PiecewiseProfile: non-finite entry");
        for (std::size_t i = 1; i < m; ++i)
            if (!(breakpoints[i - 1] < breakpoints[i]))
                throw std::invalid_argument("PiecewiseProfile: breakpoints not strictly increasing");
        const std::size_t np = m > 0 ? m - 1 : 0;
        if (values.size() != np || slopes.size() != np)
            throw std::invalid_argument("PiecewiseProfile: need one (value,slope) per bounded piece");
        if (m == 0 && left_tail != right_tail)
            throw std::invalid_argument("PiecewiseProfile: constant profile needs equal tails");
    }

    // value and slope of the piece governing [y, y+eps)
    std::pair<double, double> piece_at(double y) const {
        const std::size_t m = breakpoints.size();
        if (m == 0 || y < breakpoints.front()) return {left_tail, 0.0};
        if (y >= breakpoints.back()) return {right_tail, 0.0};
        // last breakpoint <= y
        const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), y);
        const std::size_t i = static_cast<std::size_t>(it - breakpoints.begin()) - 1;
        return {values[i] + slopes[i] * (y - breakpoints[i]), slopes[i]};
    }

    double operator()(double y) const { return piece_at(y).first; }

    // limit from below; differs from operator() only at breakpoints
    double left_limit(double y) const {
        const std::size_t m = breakpoints.size();
        if (m == 0 || y <= breakpoints.front()) return left_tail;
        if (y > breakpoints.back()) return right_tail;
        const auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), y);
        const std::size_t i = static_cast<std::size_t>(it - breakpoints.begin());
        if (i < m && breakpoints[i] == y) {
            if (i == 0) return left_tail;
            return values[i - 1] + slopes[i - 1] * (y - breakpoints[i - 1]);
        }
        return values[i - 1] + slopes[i - 1] * (y - breakpoints[i - 1]);
    }

    // exact range over all of R (affine pieces attain extremes at ends)
    std::pair<double, double> range() const {
        double lo = std::min(left_tail, right_tail);
        double hi = std::max(left_tail, right_tail);
        for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
            const double va = values[i];
            const double vb = values[i] + slopes[i] * (breakpoints[i + 1] - breakpoints[i]);
            lo = std::min({lo, va, vb});
            hi = std::max({hi, va, vb});
        }
        return {lo, hi};
    }

    double sup_abs() const {
        auto [lo, hi] = range();
        return std::max(std::abs(lo), std::abs(hi));
    }

    PiecewiseProfile shifted(double delta) const {
        PiecewiseProfile p = *this;
        for (double& b : p.breakpoints) b += delta;
        return p;
    }
};

// N profiles re-expressed on one merged breakpoint set, plus the derived
// sigma profile sum_k c_k u_{0k}.
struct ProblemSpec {
    CoefficientVector c;
    std::vector<PiecewiseProfile> profiles;
    PiecewiseProfile sigma_profile;

    ProblemSpec() = default;
    ProblemSpec(CoefficientVector coeffs, std::vector<PiecewiseProfile> raw_profiles)
        : c(std::move(coeffs)) {
        if (raw_profiles.size() != c.size())
            throw std::invalid_argument("ProblemSpec: need one profile per coefficient");
        for (const auto& p : raw_profiles) p.validate();

        std::vector<double> merged;
        for (const auto& p : raw_profiles)
            merged.insert(merged.end(), p.breakpoints.begin(), p.breakpoints.end());
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

        profiles.reserve(raw_profiles.size());
        for (const auto& p : raw_profiles) profiles.push_back(on_breakpoints(p, merged));
        sigma_profile = on_breakpoints(PiecewiseProfile{}, merged);  // zero skeleton
        sigma_profile.left_tail = sigma_profile.right_tail = 0.0;
        for (std::size_t k = 0; k < profiles.size(); ++k) {
            const auto& p = profiles[k];
            sigma_profile.left_tail += c[k] * p.left_tail;
            sigma_profile.right_tail += c[k] * p.right_tail;
            for (std::size_t i = 0; i < sigma_profile.values.size(); ++i) {
                sigma_profile.values[i] += c[k] * p.values[i];
                sigma_profile.slopes[i] += c[k] * p.slopes[i];
            }
        }
        sigma_profile.validate();
    }

    std::size_t components() const { return c.size(); }

    std::vector<double> initial_value(double y) const {
        std::vector<double> u(profiles.size());
        for (std::size_t k = 0; k < profiles.size(); ++k) u[k] = profiles[k](y);
        return u;
    }

    ProblemSpec shifted(double delta) const {
        std::vector<PiecewiseProfile> moved;
        moved.reserve(profiles.size());
        for (const auto& p : profiles) moved.push_back(p.shifted(delta));
        return ProblemSpec(c, std::move(moved));
    }

private:
    // re-express p on the (super)set of breakpoints `bs`
    static PiecewiseProfile on_breakpoints(const PiecewiseProfile& p, const std::vector<double>& bs) {
        PiecewiseProfile q;
        q.breakpoints = bs;
        q.left_tail = p.left_tail;
        q.right_tail = p.right_tail;
        if (bs.size() > 1) {
            q.values.resize(bs.size() - 1);
            q.slopes.resize(bs.size() - 1);
            for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
                auto [v, s] = p.piece_at(bs[i]);
                q.values[i] = v;
                q.slopes[i] = s;
            }
        }
        return q;
    }
};

// I(y) = int_0^y sigma(c,u0(z)) dz, exact piecewise quadratic, I(0) = 0.
// Tail slopes are the tail values of the sigma profile; the limit at +-inf is
// finite iff the corresponding tail slope vanishes.
struct PotentialFunction {
    std::vector<double> knots;        // sigma profile breakpoints
    std::vector<double> I_knots;      // I at each knot
    std::vector<double> sig_values;   // sigma at left end of bounded piece i
    std::vector<double> sig_slopes;
    double left_sigma = 0.0;          // d/dy I on the tails
    double right_sigma = 0.0;
    std::optional<double> limit_minus;  // I(-inf) when finite
    std::optional<double> limit_plus;

    double operator()(double y) const {
        if (knots.empty()) return left_sigma * y;  // globally constant sigma
        if (y < knots.front()) return I_knots.front() + left_sigma * (y - knots.front());
        if (y >= knots.back()) return I_knots.back() + right_sigma * (y - knots.back());
        const auto it = std::upper_bound(knots.begin(), knots.end(), y);
        const std::size_t i = static_cast<std::size_t>(it - knots.begin()) - 1;
        const double dy = y - knots[i];
        return I_knots[i] + sig_values[i] * dy + 0.5 * sig_slopes[i] * dy * dy;
    }

    bool divergent_minus() const { return !limit_minus.has_value(); }
    bool divergent_plus() const { return !limit_plus.has_value(); }
};

inline PotentialFunction build_potential(const ProblemSpec& spec) {
    const PiecewiseProfile& s = spec.sigma_profile;
    PotentialFunction P;
    P.knots = s.breakpoints;
    P.sig_values = s.values;
    P.sig_slopes = s.slopes;
    P.left_sigma = s.left_tail;
    P.right_sigma = s.right_tail;

    if (P.knots.empty()) {
        // I(y) = sigma0 * y with the anchor already at 0
        if (P.left_sigma == 0.0) {
            P.limit_minus = 0.0;
            P.limit_plus = 0.0;
        }
        return P;
    }

    P.I_knots.assign(P.knots.size(), 0.0);
    for (std::size_t i = 0; i + 1 < P.knots.size(); ++i) {
        const double L = P.knots[i + 1] - P.knots[i];
        P.I_knots[i + 1] = P.I_knots[i] + P.sig_values[i] * L + 0.5 * P.sig_slopes[i] * L * L;
    }
    const double anchor = P(0.0);  // provisional I(0)
    for (double& v : P.I_knots) v -= anchor;

    if (P.left_sigma == 0.0) P.limit_minus = P.I_knots.front();
    if (P.right_sigma == 0.0) P.limit_plus = P.I_knots.back();
    return P;
}

inline double potential_value(const PotentialFunction& P, double y) { return P(y); }

// convenience: N=1 box data u0 on (-l, l), zero outside
inline ProblemSpec box_spec(const CoefficientVector& c, const std::vector<double>& u0, double l) {
    if (!(l > 0.0)) throw std::invalid_argument("box_spec: need l > 0");
    if (u0.size() != c.size()) throw std::invalid_argument("box_spec: dimension mismatch");
    std::vector<PiecewiseProfile> ps;
    ps.reserve(u0.size());
    for (double v : u0) {
        PiecewiseProfile p;
        p.breakpoints = {-l, l};
        p.values = {v};
        p.slopes = {0.0};
        ps.push_back(p);
    }
    return ProblemSpec(c, std::move(ps));
}

// step data: uL for x < 0, uR for x >= 0
inline ProblemSpec riemann_spec(const CoefficientVector& c, const std::vector<double>& uL,
                                const std::vector<double>& uR) {
    if (uL.size() != c.size() || uR.size() != c.size())
        throw std::invalid_argument("riemann_spec: dimension mismatch");
    std::vector<PiecewiseProfile> ps;
    ps.reserve(uL.size());
    for (std::size_t k = 0; k < uL.size(); ++k) {
        PiecewiseProfile p;
        p.breakpoints = {0.0};
        p.left_tail = uL[k];
        p.right_tail = uR[k];
        ps.push_back(p);
    }
    return ProblemSpec(c, std::move(ps));
}

}  // namespace gburgers
