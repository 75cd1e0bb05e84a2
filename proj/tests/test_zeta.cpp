#include "regsum/zeta.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace regsum;
using namespace regsum::zeta;
using test::near;
using test::X;

namespace {

const XReal kTight("1e-40");

XReal tol() { return active_config().abs_tol; }

// Central difference of MPFR's zeta: an oracle that shares nothing with the engine.
XReal mpfr_zeta_prime(const XReal& s) {
    const XReal h("1e-18");
    return (test::mpfr_zeta_of(s + h) - test::mpfr_zeta_of(s - h)) / (2 * h);
}

}  // namespace

TEST(RiemannZeta, SpecialValues) {
    EXPECT_TRUE(near(riemann_zeta(XReal(2)), pi() * pi() / 6, kTight));
    EXPECT_TRUE(near(riemann_zeta(XReal(0)), X("-0.5"), kTight));
    EXPECT_TRUE(near(riemann_zeta(XReal(-3)), XReal(1) / 120, kTight));
    EXPECT_EQ(riemann_zeta(XReal(-4)), 0);
}

TEST(RiemannZeta, AgreesWithMpfr) {
    for (const char* s : {"-7.5", "-2.25", "-1", "0.3", "0.95", "1.05", "1.5", "2.5", "3", "7", "30.25"})
        EXPECT_TRUE(near(riemann_zeta(X(s)), test::mpfr_zeta_of(X(s)), kTight)) << s;
}

TEST(RiemannZeta, NearPole) {
    EXPECT_TRUE(near(riemann_zeta(X("0.95")), X("-19.4264371969307991714281078691086761242351561"), kTight));
    EXPECT_TRUE(near(riemann_zeta(X("1.05")), X("20.5808443020370025903406947051847228067467386"), kTight));
    EXPECT_THROW(riemann_zeta(XReal(1)), PoleError);
}

TEST(Eta, Values) {
    EXPECT_TRUE(near(eta(XReal(0)), X("0.5"), kTight));
    EXPECT_TRUE(near(eta(XReal(-2)), XReal(0), kTight));
    EXPECT_TRUE(near(eta(XReal(1)), log2_const(), kTight));
    EXPECT_TRUE(near(eta(X("0.5")), X("0.604898643421630370247265914235955499759762545"), kTight));
    EXPECT_TRUE(near(eta(X("-1.5")), X("0.118680870719840212043598557249192987856012402"), kTight));
}

TEST(Eta, AlternatingHarmonicPartialSums) {
    // Averaging consecutive partial sums cancels the O(1/N) oscillation.
    long double s = 0;
    const long N = 2000000;
    for (long n = 1; n <= N; ++n)
        s += (n % 2 ? 1.0L : -1.0L) / n;
    const long double avg = s + 0.5L / (N + 1);
    EXPECT_NEAR(static_cast<double>(avg), eta(XReal(1)).convert_to<double>(), 1e-12);
}

TEST(Eta, MatchesDefinitionAtRandomPoints) {
    test::Uniform pts(-6.0, 8.0, 3);
    for (int i = 0; i < 20; ++i) {
        const XReal s = pts();
        if (abs(s - 1) < XReal("1e-6"))
            continue;
        EXPECT_TRUE(near(eta(s), (1 - boost::multiprecision::pow(XReal(2), 1 - s)) * test::mpfr_zeta_of(s), tol()))
            << s;
    }
}

TEST(Hurwitz, LerchAtHalf) {
    const XReal want = -log2_const() / 2;
    EXPECT_TRUE(near(hurwitz_zeta_deriv(1, XReal(0), X("0.5")), want, kTight));
}

TEST(Hurwitz, SecondDerivativeAtHalf) {
    const XReal l2 = log2_const();
    const XReal want = -log_two_pi() * l2 - l2 * l2 / 2;
    EXPECT_TRUE(near(hurwitz_zeta_deriv(2, XReal(0), X("0.5")), want, kTight));
}

TEST(Hurwitz, ReducesToRiemannAtOne) {
    for (const char* s : {"-3.5", "-1", "1.5", "4"})
        EXPECT_TRUE(near(hurwitz_zeta_deriv(0, X(s), XReal(1)), test::mpfr_zeta_of(X(s)), kTight)) << s;
}

TEST(Hurwitz, FrozenValues) {
    // Reference values from an independent arbitrary-precision library.
    EXPECT_TRUE(near(hurwitz_zeta_deriv(1, XReal(0), X("0.25")),
                     X("0.369083991493404715590280703814099656063980091"), kTight));
    EXPECT_TRUE(near(hurwitz_zeta_deriv(2, XReal(0), X("0.3")),
                     X("-0.559594120009963391706584512438987480062790531"), kTight));
    EXPECT_TRUE(near(hurwitz_zeta_deriv(0, X("0.5"), X("0.3")),
                     X("0.0111527803099698103632744908184397030315706615"), kTight));
    EXPECT_TRUE(near(hurwitz_zeta_deriv(1, X("-1.5"), X("0.7")),
                     X("0.013117980901273478602873577576672243738397573"), kTight));
    EXPECT_TRUE(near(hurwitz_zeta_deriv(2, X("2.5"), X("1.3")),
                     X("0.594144714962123932037292502461484233810322192"), kTight));
}

TEST(Hurwitz, HalfShiftFormula) {
    for (const char* s : {"-2.5", "0.5", "3"}) {
        const XReal sv = X(s);
        EXPECT_TRUE(near(hurwitz_zeta_deriv(0, sv, X("0.5")),
                         (boost::multiprecision::pow(XReal(2), sv) - 1) * test::mpfr_zeta_of(sv), tol()))
            << s;
    }
}

TEST(Hurwitz, ShiftByOne) {
    using boost::multiprecision::log;
    using boost::multiprecision::pow;
    const XReal x("0.37");
    for (const char* s : {"-2.5", "0.5", "2.75"}) {
        const XReal sv = X(s);
        EXPECT_TRUE(near(hurwitz_zeta_deriv(0, sv, 1 + x), hurwitz_zeta_deriv(0, sv, x) - pow(x, -sv), tol()));
    }
    for (int m = 1; m <= 4; ++m) {
        const XReal sv(1 - 2 * m);
        EXPECT_TRUE(near(hurwitz_zeta_deriv(1, sv, 1 + x),
                         hurwitz_zeta_deriv(1, sv, x) + pow(x, 2 * m - 1) * log(x), tol()))
            << m;
    }
}

TEST(Hurwitz, LerchFormulaAgainstLogGamma) {
    for (const char* a : {"0.25", "0.5", "1", "2"}) {
        EXPECT_TRUE(near(hurwitz_zeta_deriv(1, XReal(0), X(a)), test::mpfr_lgamma_of(X(a)) - log_two_pi() / 2, tol()))
            << a;
    }
}

TEST(Hurwitz, Errors) {
    EXPECT_THROW(hurwitz_zeta_deriv(1, XReal(1), X("0.5")), PoleError);
    EXPECT_THROW(hurwitz_zeta_deriv(0, XReal(2), XReal(0)), DomainError);
    EXPECT_THROW(hurwitz_zeta_deriv(3, XReal(2), XReal(1)), DomainError);
}

TEST(ZetaPrimeNegatives, EvenIndex) {
    const XReal want = -test::mpfr_zeta_of(XReal(3)) / (4 * pi() * pi());
    EXPECT_TRUE(near(zeta_sderiv_at_negatives(2), want, kTight));
    EXPECT_TRUE(near(zeta_sderiv_at_negatives(2), X("-0.0304484570583932707802515304711547766470004835"), kTight));
}

TEST(ZetaPrimeNegatives, OddIndexRoutesAgree) {
    EXPECT_TRUE(near(zeta_sderiv_at_negatives(1), X("-0.16542114370045092921391966024278064276403638"), kTight));
    EXPECT_TRUE(near(zeta_sderiv_at_negatives(3), X("0.00537857635777430114441697421041384289566443974"), kTight));
    for (int j = 1; j <= 41; j += 4)
        EXPECT_TRUE(near(zeta_sderiv_at_negatives(j), zeta_sderiv_at_negatives_hurwitz(j),
                         XReal("1e-40") * std::max(XReal(1), abs(zeta_sderiv_at_negatives(j)))))
            << j;
}

TEST(ZetaPrimeNegatives, FiniteDifferenceOracle) {
    for (int j = 1; j <= 6; ++j)
        EXPECT_TRUE(near(zeta_sderiv_at_negatives(j), mpfr_zeta_prime(XReal(-j)), XReal("1e-30"))) << j;
}

TEST(ZetaPrimeNegatives, ZeroIsSeparate) {
    EXPECT_THROW(zeta_sderiv_at_negatives(0), DomainError);
    EXPECT_TRUE(near(zeta_prime_at_zero(), -log_two_pi() / 2, kTight));
    EXPECT_TRUE(near(zeta_prime_at_zero(), mpfr_zeta_prime(XReal(0)), XReal("1e-30")));
}

TEST(Digamma, Values) {
    const XReal g = test::mpfr_euler();
    EXPECT_TRUE(near(digamma(XReal(1)), -g, kTight));
    EXPECT_TRUE(near(digamma(XReal(2)), 1 - g, kTight));
    EXPECT_TRUE(near(digamma(X("1.25")) - digamma(X("0.75")), 4 - pi(), kTight));
    for (const char* x : {"0.01", "0.3", "0.5", "3.7", "150.5", "-0.5", "-2.25"})
        EXPECT_TRUE(near(digamma(X(x)), test::mpfr_digamma_of(X(x)), kTight)) << x;
    EXPECT_THROW(digamma(XReal(0)), PoleError);
    EXPECT_THROW(digamma(XReal(-3)), PoleError);
}

TEST(LogGamma, AgreesWithMpfr) {
    for (const char* x : {"0.001", "0.3", "0.5", "1", "2", "9.75", "200.1"})
        EXPECT_TRUE(near(log_gamma(X(x)), test::mpfr_lgamma_of(X(x)), kTight)) << x;
    EXPECT_TRUE(near(gamma_fn(X("-1.5")), X("2.36327180120735470306422331112152691039673261"), kTight));
    EXPECT_THROW(gamma_fn(XReal(-2)), PoleError);
    EXPECT_THROW(log_gamma(XReal(-1)), DomainError);
}

TEST(Constants, EulerGamma) {
    EXPECT_TRUE(near(euler_gamma(), test::mpfr_euler(), XReal("1e-55")));
}

TEST(Harmonic, Values) {
    EXPECT_EQ(harmonic_number(0), 0);
    EXPECT_TRUE(near(harmonic_number(4), XReal(25) / 12, kTight));
}
