#include "regsum/oracles.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace regsum;
using test::near;
using test::X;

namespace {

SeriesSpec make(Kernel k, bool alt, const char* s, const char* x, Weight w = Weight::unit) {
    SeriesSpec spec;
    spec.kernel = k;
    spec.alternating = alt;
    spec.weight = w;
    spec.s = X(s);
    spec.x = X(x);
    return spec;
}

// sum r^n sin(n theta) = r sin(theta) / (1 - 2 r cos(theta) + r^2): the Abel
// limit of the plain sine series, computed without any summation.
long double geometric_sine(long double r, long double theta) {
    return r * std::sin(theta) / (1 - 2 * r * std::cos(theta) + r * r);
}

}  // namespace

TEST(Abel, SineLimitQuarter) {
    const RegularizedValue v = abel_oracle(make(Kernel::sin, false, "0", "0.25"));
    EXPECT_TRUE(near(v.value, X("0.5"), X("1e-6")));
    EXPECT_EQ(v.method, Method::abel);
    EXPECT_TRUE(v.error_estimate >= 0);
    EXPECT_GT(v.terms_used, 0u);
}

TEST(Abel, GeometricClosedFormLimit) {
    const long double theta = 2 * std::numbers::pi_v<long double> * 0.3L;
    const long double limit = 0.5L / std::tan(theta / 2);
    EXPECT_NEAR(static_cast<double>(geometric_sine(1 - 1e-9L, theta)), static_cast<double>(limit), 1e-8);
    const RegularizedValue v = abel_oracle(make(Kernel::sin, false, "0", "0.3"));
    EXPECT_NEAR(v.value.convert_to<double>(), static_cast<double>(limit), 1e-6);
}

TEST(Abel, AlternatingCosineIsHalfAwayFromHalf) {
    for (const char* x : {"0.1", "0.3", "0.45", "0.7", "0.9"})
        EXPECT_TRUE(near(abel_oracle(make(Kernel::cos, true, "0", x)).value, X("0.5"), X("1e-6"))) << x;
}

TEST(Abel, AlternatingCosineAtHalfIsNotAbelSummable) {
    // At x = 1/2 every term is -1: sum -r^n = -r/(1-r) has no limit, so the
    // oracle cannot reproduce the analytic-continuation value -zeta(0) = 1/2.
    const RegularizedValue v = abel_oracle(make(Kernel::cos, true, "0", "0.5"));
    EXPECT_GT(abs(v.value - X("0.5")), X("1"));
}

TEST(Abel, LogCosineLimit) {
    // Reference value from an independent arbitrary-precision library.
    const RegularizedValue v = abel_oracle(make(Kernel::cos, false, "0", "0.3", Weight::log));
    EXPECT_TRUE(near(v.value, X("0.0269094216809222711553103434634589697534665226"), X("1e-5")));
}

TEST(Abel, LogWeightPositiveExponent) {
    const RegularizedValue v = abel_oracle(make(Kernel::cos, false, "0.5", "0.3", Weight::log));
    EXPECT_TRUE(near(v.value, X("-0.0230617247144719627372379209380698053933957346"), X("1e-8")));
}

TEST(Abel, ErrorEstimateIsHonest) {
    const SeriesSpec spec = make(Kernel::sin, false, "0.5", "0.25");
    const RegularizedValue v = abel_oracle(spec);
    const XReal truth("0.66769145718960917665869092930024848225159783");
    EXPECT_TRUE(abs(v.value - truth) <= 10 * v.error_estimate + X("1e-15"));
}

TEST(Abel, FewerLevelsStillWork) {
    EvalConfig cfg = active_config();
    cfg.abel_r_levels = 6;
    cfg.richardson_order = 4;
    const RegularizedValue v = abel_oracle(make(Kernel::sin, false, "0", "0.25"), cfg);
    EXPECT_TRUE(near(v.value, X("0.5"), X("1e-4")));
}

TEST(Direct, KnownSums) {
    EXPECT_TRUE(near(direct_oracle(make(Kernel::sin, false, "3", "0.25"), 100000).value, pi() * pi() * pi() / 32,
                     X("1e-8")));
    EXPECT_TRUE(near(direct_oracle(make(Kernel::cos, false, "2", "0.25"), 100000).value, -pi() * pi() / 48,
                     X("1e-7")));
}

TEST(Direct, EmptySum) {
    const RegularizedValue v = direct_oracle(make(Kernel::sin, false, "2", "0.25"), 0);
    EXPECT_EQ(v.value, 0);
    EXPECT_TRUE(boost::multiprecision::isinf(v.error_estimate));
}

TEST(Direct, RequiresConvergentExponent) {
    EXPECT_THROW(direct_oracle(make(Kernel::sin, false, "1", "0.25"), 100), DomainError);
    EXPECT_THROW(direct_oracle(make(Kernel::sin, false, "2", "1.25"), 100), DomainError);
}

TEST(Direct, ErrorEstimateCoversNonOscillatingTail) {
    // Alternating cosine at x = 1/2 is -zeta(s): partial sums approach it like N^{1-s}.
    const RegularizedValue v = direct_oracle(make(Kernel::cos, true, "1.5", "0.5"), 100000);
    const XReal truth = -test::mpfr_zeta_of(X("1.5"));
    EXPECT_TRUE(abs(v.value - truth) <= v.error_estimate);
    EXPECT_TRUE(abs(v.value - truth) > X("1e-4"));
}

TEST(Direct, SmallFirstTerms) {
    const RegularizedValue v = direct_oracle(make(Kernel::cos, true, "2", "0.5"), 1);
    // One term: cos(pi) = -1, window of one partial sum.
    EXPECT_TRUE(near(v.value, XReal(-1), X("1e-15")));
}
