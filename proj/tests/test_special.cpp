#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gburgers/special.hpp"

using namespace gburgers;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

// Reference values below were frozen from 50-digit evaluations of
// integral(exp(-s^2), s=y..inf) and exp(z^2)*erfc(z).

TEST_CASE("erfc_integral matches frozen references") {
    CHECK_THAT(erfc_integral(0.0), WithinRel(0.88622692545275801, 1e-15));  // sqrt(pi)/2
    CHECK_THAT(erfc_integral(2.0), WithinRel(0.0041455346903363354, 1e-14));
    CHECK_THAT(erfc_integral(-1.0 / std::sqrt(2.0)), WithinRel(1.4912447351083125, 1e-14));
    CHECK_THAT(erfc_integral(5.0), WithinRel(1.3625382666231867e-12, 1e-13));
    // complements: integral over all of R is sqrt(pi)
    for (double y : {-3.0, -0.7, 0.0, 1.3, 4.0})
        CHECK_THAT(erfc_integral(y) + erfc_integral(-y), WithinRel(kSqrtPi, 1e-15));
    CHECK(erfc_integral(40.0) == 0.0);  // underflow region, must not NaN
    CHECK(erfc_integral(-40.0) == Catch::Approx(kSqrtPi));
}

TEST_CASE("erfcx stays accurate into the deep tail") {
    CHECK_THAT(erfcx(0.0), WithinRel(1.0, 1e-15));
    CHECK_THAT(erfcx(1.0), WithinRel(0.42758357615580700, 1e-14));
    CHECK_THAT(erfcx(10.0), WithinRel(0.056140992743822586, 1e-13));
    // direct formula dies around z ~ 27 (exp overflow * erfc underflow);
    // the asymptotic branch has to take over seamlessly
    CHECK_THAT(erfcx(24.9), WithinRel(erfcx(25.1) * 25.1 / 24.9, 2e-3));
    CHECK(std::isfinite(erfcx(1000.0)));
    CHECK_THAT(erfcx(1000.0) * 1000.0 * kSqrtPi, WithinRel(1.0, 1e-5));
}

TEST_CASE("log_erfc_integral agrees with the direct value where both work") {
    for (double y : {-5.0, -1.0, 0.0, 1.0, 5.0, 20.0})
        CHECK_THAT(std::exp(log_erfc_integral(y)), WithinRel(erfc_integral(y), 1e-12));
    // far past the underflow point of the direct formula
    const double big = log_erfc_integral(100.0);
    CHECK(std::isfinite(big));
    // leading order: log(e^{-y^2}/(2y)) = -y^2 - log(2y)
    CHECK_THAT(big, WithinAbs(-10000.0 - std::log(200.0), 0.01));
}

TEST_CASE("logsumexp and log_diff_exp basics") {
    CHECK_THAT(logsumexp({std::log(1.0), std::log(2.0), std::log(3.0)}),
               WithinRel(std::log(6.0), 1e-15));
    CHECK_THAT(log_diff_exp(std::log(3.0), std::log(1.0)), WithinRel(std::log(2.0), 1e-15));
    // huge shared offsets must cancel
    CHECK_THAT(logsumexp({1000.0, 1000.0}), WithinRel(1000.0 + std::log(2.0), 1e-15));
    CHECK(logsumexp({-kInf, -kInf}) == -kInf);
}

TEST_CASE("log_erfc_diff covers all three branches without cancellation") {
    auto direct = [](double a, double b) { return erfc_integral(a) - erfc_integral(b); };
    // both positive (log-domain difference)
    CHECK_THAT(std::exp(log_erfc_diff(0.5, 1.5)), WithinRel(direct(0.5, 1.5), 1e-12));
    CHECK_THAT(std::exp(log_erfc_diff(3.0, 10.0)), WithinRel(direct(3.0, 10.0), 1e-12));
    // both negative (reflection branch; direct subtraction would cancel badly)
    CHECK_THAT(std::exp(log_erfc_diff(-2.0, -1.0)), WithinRel(direct(-2.0, -1.0), 1e-12));
    // at -8 the direct subtraction is pure cancellation (both operands round to
    // sqrt(pi)); the reflected difference erfc_integral(7.9) - erfc_integral(8)
    // is the same quantity computed where subtraction is safe
    CHECK_THAT(std::exp(log_erfc_diff(-8.0, -7.9)), WithinRel(direct(7.9, 8.0), 1e-9));
    // straddling zero
    CHECK_THAT(std::exp(log_erfc_diff(-1.0, 2.0)), WithinRel(direct(-1.0, 2.0), 1e-12));
    // deep tail where the direct difference underflows entirely
    const double deep = log_erfc_diff(20.0, 21.0);
    CHECK_THAT(deep, WithinRel(log_erfc_integral(20.0), 1e-12));
    // ordering is required
    CHECK_THROWS_AS(log_erfc_diff(2.0, 1.0), std::invalid_argument);
}

TEST_CASE("two-term tail expansion sits within 1% at y = 5") {
    const double approx = erfc_expansion(5.0, ExpansionDirection::plus);
    CHECK_THAT(approx, WithinRel(1.3610184987664740e-12, 1e-13));  // frozen expansion value
    CHECK_THAT(approx, WithinRel(erfc_integral(5.0), 0.01));
    // minus direction approximates sqrt(pi) - tail
    const double m = erfc_expansion(5.0, ExpansionDirection::minus);
    CHECK_THAT(m, WithinRel(erfc_integral(-5.0), 1e-5));
    CHECK_THROWS_AS(erfc_expansion(-1.0, ExpansionDirection::plus), std::invalid_argument);
}

TEST_CASE("LogValue round trips signed magnitudes") {
    const LogValue a = LogValue::from(-2.5);
    CHECK(a.sign == -1);
    CHECK_THAT(a.value(), WithinRel(-2.5, 1e-15));
    const LogValue b = LogValue::positive(std::log(7.0));
    CHECK_THAT(b.value(), WithinRel(7.0, 1e-15));
    CHECK(LogValue::from(0.0).value() == 0.0);
}
