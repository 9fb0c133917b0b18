#pragma once
// Error-function helpers in the normalization the solution formulas use,
//   erfc_integral(y) = int_y^inf e^{-s^2} ds = (sqrt(pi)/2) * std::erfc(y),
// plus log-domain machinery (erfcx, logsumexp, stable log-differences) so the
// closed forms survive small viscosities, where raw prefactors reach e^{50}
// and beyond.

#include <cmath>
#include <initializer_list>
#include <limits>
#include <stdexcept>

namespace gburgers {

inline constexpr double kSqrtPi = 1.7724538509055160273;
inline constexpr double kHalfSqrtPi = 0.8862269254527580137;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// int_y^inf e^{-s^2} ds.  Underflows to 0 past y ~ 27, which is the honest
// linear-domain answer; use log_erfc_integral when the exponent matters.
inline double erfc_integral(double y) { return kHalfSqrtPi * std::erfc(y); }

// scaled complement: erfcx(z) = e^{z^2} erfc(z), finite for all z >= 0
inline double erfcx(double z) {
    if (z <= 25.0) return std::exp(z * z) * std::erfc(z);
    // asymptotic series, error < 1e-14 at z = 25
    const double w = 1.0 / (2.0 * z * z);
    double term = 1.0, sum = 1.0;
    for (int n = 1; n <= 6; ++n) {
        term *= -(2 * n - 1) * w;
        sum += term;
    }
    return sum / (z * kSqrtPi);
}

// log of erfc_integral, valid across the whole real line
inline double log_erfc_integral(double y) {
    if (y <= 0.0) return std::log(erfc_integral(y));  // value in [sqrt(pi)/2, sqrt(pi))
    return std::log(kHalfSqrtPi * erfcx(y)) - y * y;
}

// log(e^a - e^b) for a >= b
inline double log_diff_exp(double a, double b) {
    if (b == -kInf) return a;
    if (!(a >= b)) throw std::invalid_argument("log_diff_exp: need a >= b");
    const double d = b - a;
    if (d == 0.0) return -kInf;
    return a + std::log1p(-std::exp(d));
}

inline double logsumexp(std::initializer_list<double> xs) {
    double m = -kInf;
    for (double x : xs) m = std::max(m, x);
    if (m == -kInf) return -kInf;
    double s = 0.0;
    for (double x : xs) s += std::exp(x - m);
    return m + std::log(s);
}

// log of int_a^b e^{-s^2} ds for a <= b, stable in every regime:
// both limits deep in a tail, or straddling the bulk.
inline double log_erfc_diff(double a, double b) {
    if (!(a <= b)) throw std::invalid_argument("log_erfc_diff: need a <= b");
    if (a == b) return -kInf;
    if (b <= 0.0) return log_erfc_diff(-b, -a);  // reflection s -> -s
    if (a >= 0.0) return log_diff_exp(log_erfc_integral(a), log_erfc_integral(b));
    // a < 0 < b: the integral covers the bulk, linear arithmetic is fine
    return std::log(kSqrtPi - erfc_integral(-a) - erfc_integral(b));
}

// two-term tail expansions of erfc_integral, kept for cross-checks only:
//   direction plus :  (1/2y - 1/4y^3) e^{-y^2}          (y -> +inf)
//   direction minus:  sqrt(pi) - (1/2y - 1/4y^3) e^{-y^2}   (value at -y)
enum class ExpansionDirection { plus, minus };

inline double erfc_expansion(double y, ExpansionDirection dir) {
    if (!(y > 0.0)) throw std::invalid_argument("erfc_expansion: need y > 0");
    const double tail = (0.5 / y - 0.25 / (y * y * y)) * std::exp(-y * y);
    return dir == ExpansionDirection::plus ? tail : kSqrtPi - tail;
}

// (sign, log-magnitude) pair; sign 0 encodes an exact zero
struct LogValue {
    int sign = 0;
    double log_mag = -kInf;

    static LogValue from(double v) {
        if (v == 0.0) return {0, -kInf};
        return {v > 0.0 ? 1 : -1, std::log(std::abs(v))};
    }
    static LogValue positive(double lm) { return {1, lm}; }
    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_mag); }
};

}  // namespace gburgers
