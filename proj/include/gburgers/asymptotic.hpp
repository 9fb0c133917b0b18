#pragma once
// Large-time behavior tools: the self-similar limit profile in xi = x/sqrt(t nu),
// support-edge measurement on sampled slices, sup-norms, and power-law decay
// fits.
//
// The limit profile is a convex combination of the data's infinities,
//
//            u_(+inf) e^{-I(+inf)/nu} G^-(xi)  +  u_(-inf) e^{-I(-inf)/nu} G^+(xi)
//   u_j ~    ---------------------------------------------------------------------
//                    e^{-I(+inf)/nu} G^-(xi)   +   e^{-I(-inf)/nu} G^+(xi)
//
// with G^-(xi) = int_{-inf}^{xi} e^{-y^2/2} dy and G^+ its complement.  The
// weights are balanced by subtracting min(I(+inf), I(-inf)) before
// exponentiating, so nothing underflows for any viscosity.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "field.hpp"
#include "model.hpp"
#include "special.hpp"

namespace gburgers {

struct AsymptoticInputs {
    double I_plus = 0.0, I_minus = 0.0;
    std::vector<double> u_plus, u_minus;
    double nu = 1.0;

    AsymptoticInputs(double ip, double im, std::vector<double> up, std::vector<double> um,
                     double viscosity)
        : I_plus(ip), I_minus(im), u_plus(std::move(up)), u_minus(std::move(um)), nu(viscosity) {
        if (!std::isfinite(I_plus) || !std::isfinite(I_minus) || !all_finite(u_plus) ||
            !all_finite(u_minus))
            throw std::invalid_argument("AsymptoticInputs: non-finite entry");
        if (u_plus.size() != u_minus.size() || u_plus.empty())
            throw std::invalid_argument("AsymptoticInputs: mismatched component counts");
        if (!(nu > 0.0)) throw std::invalid_argument("AsymptoticInputs: need nu > 0");
    }

    static AsymptoticInputs from_spec(const ProblemSpec& spec, const PotentialFunction& P,
                                      double nu) {
        if (P.divergent_plus() || P.divergent_minus())
            throw std::invalid_argument(
                "AsymptoticInputs: potential diverges at infinity; the limit profile needs "
                "finite I(+-inf)");
        std::vector<double> up, um;
        for (const auto& p : spec.profiles) {
            up.push_back(p.right_tail);
            um.push_back(p.left_tail);
        }
        return AsymptoticInputs(*P.limit_plus, *P.limit_minus, std::move(up), std::move(um), nu);
    }
};

inline std::vector<double> asymptotic_profile(const AsymptoticInputs& ai, double x, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("asymptotic_profile: need t > 0");
    const double xi = x / std::sqrt(t * ai.nu);
    const double sqrt2 = std::sqrt(2.0);
    const double g_minus = sqrt2 * erfc_integral(-xi / sqrt2);  // mass below xi
    const double g_plus = sqrt2 * erfc_integral(xi / sqrt2);

    const double base = std::min(ai.I_plus, ai.I_minus);
    const double w_plus = std::exp(-(ai.I_plus - base) / ai.nu);
    const double w_minus = std::exp(-(ai.I_minus - base) / ai.nu);
    const double den = w_plus * g_minus + w_minus * g_plus;
    if (!(den > 0.0))
        throw std::runtime_error("asymptotic_profile: weights underflow; |xi| too extreme");

    std::vector<double> u(ai.u_plus.size());
    for (std::size_t j = 0; j < u.size(); ++j)
        u[j] = (ai.u_plus[j] * w_plus * g_minus + ai.u_minus[j] * w_minus * g_plus) / den;
    return u;
}

inline FieldSlice asymptotic_profile_grid(const AsymptoticInputs& ai, const std::vector<double>& xs,
                                          double t) {
    FieldSlice slice;
    slice.t = t;
    slice.x = xs;
    slice.u.assign(ai.u_plus.size(), std::vector<double>(xs.size(), 0.0));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const std::vector<double> v = asymptotic_profile(ai, xs[i], t);
        for (std::size_t j = 0; j < v.size(); ++j) slice.u[j][i] = v[j];
    }
    return slice;
}

struct SupportEstimate {
    double t = 0.0;
    std::optional<double> s_minus, s_plus;  // empty when the slice never exceeds threshold
    double threshold = 0.0;
};

inline SupportEstimate support_curves(const FieldSlice& slice, double threshold) {
    if (!(threshold > 0.0)) throw std::invalid_argument("support_curves: need threshold > 0");
    slice.check_consistent();
    SupportEstimate est;
    est.t = slice.t;
    est.threshold = threshold;
    const auto loud = [&](std::size_t i) {
        for (const auto& uj : slice.u)
            if (std::abs(uj[i]) > threshold) return true;
        return false;
    };
    for (std::size_t i = 0; i < slice.points(); ++i) {
        if (loud(i)) {
            est.s_minus = slice.x[i];
            break;
        }
    }
    for (std::size_t i = slice.points(); i-- > 0;) {
        if (loud(i)) {
            est.s_plus = slice.x[i];
            break;
        }
    }
    return est;
}

inline std::vector<double> sup_norm(const FieldSlice& slice) {
    if (slice.points() == 0) throw std::invalid_argument("sup_norm: empty slice");
    slice.check_consistent();
    std::vector<double> s(slice.components(), 0.0);
    for (std::size_t j = 0; j < slice.components(); ++j)
        for (double v : slice.u[j]) s[j] = std::max(s[j], std::abs(v));
    return s;
}

struct DecayFit {
    double exponent = 0.0;
    double log_intercept = 0.0;
    double r_squared = 1.0;
    std::pair<double, double> window{0.0, 0.0};
};

// least squares on (log t, log s); the exponent is the slope
inline DecayFit decay_rate_fit(const std::vector<std::pair<double, double>>& series) {
    if (series.size() < 3) throw std::invalid_argument("decay_rate_fit: need >= 3 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (const auto& [t, s] : series) {
        if (!(t > 0.0) || !(s > 0.0))
            throw std::invalid_argument("decay_rate_fit: need positive t and sup-norm values");
        const double lx = std::log(t), ly = std::log(s);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly; syy += ly * ly;
    }
    const double n = static_cast<double>(series.size());
    const double vxx = sxx - sx * sx / n;
    const double vxy = sxy - sx * sy / n;
    const double vyy = syy - sy * sy / n;
    if (!(vxx > 0.0)) throw std::invalid_argument("decay_rate_fit: degenerate t values");

    DecayFit fit;
    fit.exponent = vxy / vxx;
    fit.log_intercept = (sy - fit.exponent * sx) / n;
    const double ss_res = std::max(0.0, vyy - vxy * vxy / vxx);
    fit.r_squared = vyy > 0.0 ? std::clamp(1.0 - ss_res / vyy, 0.0, 1.0) : 1.0;
    auto [tmin, tmax] = std::minmax_element(series.begin(), series.end());
    fit.window = {tmin->first, tmax->first};
    return fit;
}

}  // namespace gburgers
