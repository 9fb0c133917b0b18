#pragma once
// Closed-form solutions for box and step (Riemann) initial data.
//
// Box data: u_{0j} constant on (-l, l), zero outside; sigma0 = sum c_k u_{0k}.
// The viscous solution is an explicit erfc expression through the two
// auxiliary functions
//
//   A^nu_{l,s0}(x,t) = sqrt(2 t nu) e^{s0^2 t/2nu - s0 x/nu}
//                        * erfc_integral((t s0 - x - l)/sqrt(2 t nu)),
//   B^nu_{l,s0}      = same with +l,
//
// carried as (sign, log) pairs: the prefactor alone reaches e^{s0^2 t/2nu},
// hopeless in linear arithmetic at small nu.  The full solution is
//
//              u_{0j} (A_{s0} - B_{s0})
//   u_j = --------------------------------------------------------------
//         e^{s0 l/nu}(sqrt(2 pi t nu) - A_{l,0}) + (A_{s0} - B_{s0})
//                                               + e^{-s0 l/nu} B_{l,0}
//
// where sqrt(2 pi t nu) - A_{l,0} = sqrt(2 t nu) erfc_integral((x+l)/sqrt(2 t nu))
// and B_{l,0} = sqrt(2 t nu) erfc_integral((l-x)/sqrt(2 t nu)); every term is
// positive, so the denominator is one logsumexp.  At sigma0 = 0 the
// denominator collapses to sqrt(2 pi t nu) exactly.

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "model.hpp"
#include "special.hpp"

namespace gburgers {

struct BoxData {
    double l = 1.0;
    std::vector<double> u0;
    CoefficientVector c;
    double sigma0 = 0.0;

    BoxData(double half_width, std::vector<double> values, CoefficientVector coeffs)
        : l(half_width), u0(std::move(values)), c(std::move(coeffs)) {
        if (!(l > 0.0)) throw std::invalid_argument("BoxData: need l > 0");
        sigma0 = sigma(c, u0);
    }
};

struct RiemannData {
    std::vector<double> uL, uR;
    CoefficientVector c;
    double sigmaL = 0.0, sigmaR = 0.0;

    RiemannData(std::vector<double> left, std::vector<double> right, CoefficientVector coeffs)
        : uL(std::move(left)), uR(std::move(right)), c(std::move(coeffs)) {
        sigmaL = sigma(c, uL);
        sigmaR = sigma(c, uR);
    }
};

struct ABPair {
    LogValue A, B;
};

inline ABPair ab_functions(double l, double sigma0, double nu, double x, double t) {
    if (!(t > 0.0) || !(nu > 0.0)) throw std::invalid_argument("ab_functions: need t > 0, nu > 0");
    const double s = std::sqrt(2.0 * t * nu);
    const double pre = sigma0 * sigma0 * t / (2.0 * nu) - sigma0 * x / nu;
    const double logA = std::log(s) + pre + log_erfc_integral((t * sigma0 - x - l) / s);
    const double logB = std::log(s) + pre + log_erfc_integral((t * sigma0 - x + l) / s);
    return {LogValue::positive(logA), LogValue::positive(logB)};
}

namespace detail {

// leading small-nu asymptotics of log A (erfc tail expansions folded in);
// cross-check only, never a production path
inline double log_ab_asymptotic(double l, double sigma0, double nu, double x, double t) {
    const double s = std::sqrt(2.0 * t * nu);
    const double pre = sigma0 * sigma0 * t / (2.0 * nu) - sigma0 * x / nu;
    const double m = t * sigma0 - x - l;  // erfc argument scale
    if (m == 0.0) return std::log(s * kHalfSqrtPi) + pre;
    const double z = m / s;
    if (m > 0.0) {
        // erfc_integral(z) ~ (1/2z - 1/4z^3) e^{-z^2}
        return std::log(s) + pre - z * z + std::log(0.5 / z - 0.25 / (z * z * z));
    }
    // erfc_integral(z) ~ sqrt(pi) + e^{-z^2}/(2z), z < 0
    const double lead = std::log(s * kSqrtPi) + pre;
    const double corr = std::log(s / (2.0 * std::abs(z))) + pre - z * z;
    return log_diff_exp(lead, corr);
}

}  // namespace detail

// small-nu limit form of (A, B); valid once the erfc arguments are large
inline ABPair ab_small_nu(double l, double sigma0, double nu, double x, double t) {
    if (!(t > 0.0) || !(nu > 0.0)) throw std::invalid_argument("ab_small_nu: need t > 0, nu > 0");
    return {LogValue::positive(detail::log_ab_asymptotic(l, sigma0, nu, x, t)),
            LogValue::positive(detail::log_ab_asymptotic(-l, sigma0, nu, x, t))};
}

inline std::vector<double> viscous_box_solution(const BoxData& bd, double nu, double x, double t) {
    if (!(t > 0.0) || !(nu > 0.0))
        throw std::invalid_argument("viscous_box_solution: need t > 0, nu > 0");
    const double l = bd.l, s0 = bd.sigma0;
    const double s = std::sqrt(2.0 * t * nu);
    const double pre = s0 * s0 * t / (2.0 * nu) - s0 * x / nu;
    const double za = (t * s0 - x - l) / s;
    const double zb = (t * s0 - x + l) / s;

    const double log_amb = std::log(s) + pre + log_erfc_diff(za, zb);
    const double log_t1 = s0 * l / nu + std::log(s) + log_erfc_integral((x + l) / s);
    const double log_t3 = -s0 * l / nu + std::log(s) + log_erfc_integral((l - x) / s);
    const double ratio = std::exp(log_amb - logsumexp({log_t1, log_amb, log_t3}));

    std::vector<double> u(bd.u0.size());
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = bd.u0[j] * ratio;
    return u;
}

namespace detail {

// sigma0 > 0 case; region boundaries carry the right-limit convention
inline double inviscid_box_factor_positive(double l, double s0, double x, double t) {
    const double t_star = 4.0 * l / s0;  // fan meets the shock
    if (x < -l) return 0.0;
    if (t <= t_star) {
        if (x < -l + s0 * t) return (x + l) / (s0 * t);  // fan
        if (x < l + s0 * t / 2.0) return 1.0;            // plateau
        return 0.0;
    }
    const double shock = -l + std::sqrt(4.0 * l * s0 * t);  // parabolic shock path
    if (x < shock) return (x + l) / (s0 * t);
    return 0.0;
}

}  // namespace detail

inline std::vector<double> inviscid_box_solution(const BoxData& bd, double x, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("inviscid_box_solution: need t > 0");
    double factor = 0.0;
    if (bd.sigma0 == 0.0) {
        factor = (x >= -bd.l && x < bd.l) ? 1.0 : 0.0;  // frozen box, no decay
    } else if (bd.sigma0 > 0.0) {
        factor = detail::inviscid_box_factor_positive(bd.l, bd.sigma0, x, t);
    } else {
        // mirror image of the positive case (x -> -x flips sigma's sign);
        // boundary values inherit the mirrored convention
        factor = detail::inviscid_box_factor_positive(bd.l, -bd.sigma0, -x, t);
    }
    std::vector<double> u(bd.u0.size());
    for (std::size_t j = 0; j < u.size(); ++j) u[j] = bd.u0[j] * factor;
    return u;
}

inline std::vector<double> riemann_solution(const RiemannData& rd, double x, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("riemann_solution: need t > 0");
    const std::size_t n = rd.uL.size();
    std::vector<double> u(n);
    if (rd.sigmaL < rd.sigmaR) {  // rarefaction fan between the characteristics
        if (x < rd.sigmaL * t) return rd.uL;
        if (x >= rd.sigmaR * t) return rd.uR;
        const double theta = (x / t - rd.sigmaL) / (rd.sigmaR - rd.sigmaL);
        for (std::size_t j = 0; j < n; ++j) u[j] = rd.uL[j] + (rd.uR[j] - rd.uL[j]) * theta;
        return u;
    }
    if (rd.sigmaL == rd.sigmaR) {  // contact line x = sigma t
        return x < rd.sigmaL * t ? rd.uL : rd.uR;
    }
    const double speed = 0.5 * (rd.sigmaL + rd.sigmaR);  // shock
    if (x == speed * t) {
        for (std::size_t j = 0; j < n; ++j) u[j] = 0.5 * (rd.uL[j] + rd.uR[j]);
        return u;
    }
    return x < speed * t ? rd.uL : rd.uR;
}

}  // namespace gburgers
