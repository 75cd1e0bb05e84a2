#include "regsum/bernoulli.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace regsum;
using Q = BigRational;

namespace {

// Akiyama-Tanigawa algorithm: yields B_n with B_1 = +1/2, so flip that one.
Q akiyama_tanigawa(int n) {
    std::vector<Q> a(n + 1);
    for (int m = 0; m <= n; ++m) {
        a[m] = Q(1, m + 1);
        for (int j = m; j >= 1; --j)
            a[j - 1] = Q(j) * (a[j - 1] - a[j]);
    }
    return n == 1 ? Q(-a[0]) : a[0];
}

}  // namespace

TEST(Bernoulli, SmallValues) {
    EXPECT_EQ(bernoulli_number(0), Q(1));
    EXPECT_EQ(bernoulli_number(1), Q(-1, 2));
    EXPECT_EQ(bernoulli_number(2), Q(1, 6));
    EXPECT_EQ(bernoulli_number(12), Q(-691, 2730));
}

TEST(Bernoulli, MatchesAkiyamaTanigawa) {
    for (int n = 0; n <= 60; ++n)
        EXPECT_EQ(bernoulli_number(n), akiyama_tanigawa(n)) << "n = " << n;
}

TEST(Bernoulli, OddIndicesVanish) {
    for (int n = 3; n <= 201; n += 2)
        EXPECT_EQ(bernoulli_number(n), Q(0)) << n;
}

TEST(Bernoulli, DefiningRecurrence) {
    for (int n = 1; n <= 120; ++n) {
        Q acc(0);
        for (int k = 0; k <= n; ++k)
            acc += Q(binomial(n + 1, k)) * bernoulli_number(k);
        EXPECT_EQ(acc, Q(0)) << n;
    }
}

TEST(Bernoulli, CapacityGuard) {
    EXPECT_NO_THROW(bernoulli_number(kMaxBernoulliIndex));
    EXPECT_THROW(bernoulli_number(kMaxBernoulliIndex + 1), CapacityError);
    EXPECT_THROW(bernoulli_poly_coeffs(kMaxBernoulliIndex + 1), CapacityError);
    EXPECT_THROW(bernoulli_number(-1), DomainError);
}

TEST(BernoulliPoly, LowDegrees) {
    EXPECT_EQ(bernoulli_poly_coeffs(1), (std::vector<Q>{Q(-1, 2), Q(1)}));
    EXPECT_EQ(bernoulli_poly_coeffs(3), (std::vector<Q>{Q(0), Q(1, 2), Q(-3, 2), Q(1)}));
}

TEST(BernoulliPoly, ConstantTermIsBernoulliNumber) {
    for (int n = 0; n <= 40; ++n)
        EXPECT_EQ(bernoulli_poly_coeffs(n).front(), bernoulli_number(n));
}

TEST(BernoulliPoly, EndpointsAgree) {
    for (int n = 2; n <= 60; ++n) {
        const auto c = bernoulli_poly_coeffs(n);
        EXPECT_EQ(eval_poly(c, Q(1)), eval_poly(c, Q(0))) << n;
    }
}

TEST(BernoulliPoly, DerivativeRelation) {
    for (int n = 1; n <= 60; ++n) {
        auto lower = bernoulli_poly_coeffs(n - 1);
        for (auto& c : lower)
            c *= n;
        EXPECT_EQ(poly_derivative(bernoulli_poly_coeffs(n)), lower) << n;
    }
}

TEST(BernoulliPoly, DifferenceEquation) {
    // B_n(x+1) - B_n(x) = n x^{n-1}
    const Q x(3, 7);
    for (int n = 1; n <= 30; ++n) {
        const auto c = bernoulli_poly_coeffs(n);
        Q p(1);
        for (int i = 0; i < n - 1; ++i)
            p *= x;
        EXPECT_EQ(eval_poly(c, Q(x + 1)) - eval_poly(c, x), Q(n) * p) << n;
    }
}

TEST(BernoulliPoly, RealEvaluationMatchesExact) {
    const auto c = bernoulli_poly_coeffs(9);
    const XReal approx = eval_poly(c, XReal("0.3"));
    EXPECT_TRUE(test::near(approx, to_xreal(eval_poly(c, Q(3, 10))), XReal("1e-55")));
}

TEST(Binomial, Values) {
    EXPECT_EQ(binomial(10, 3), BigInt(120));
    EXPECT_EQ(binomial(5, 7), BigInt(0));
    EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
}

TEST(BernoulliReal, RoundsExactValue) {
    EXPECT_TRUE(test::near(bernoulli_real(12), XReal(-691) / 2730, XReal("1e-58")));
}
