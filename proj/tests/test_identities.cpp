#include "regsum/identities.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace regsum;
using test::near;
using test::X;

namespace {

std::vector<XReal> grid() {
    std::vector<XReal> g;
    for (int i = 1; i <= 9; ++i)
        g.push_back(XReal(i) / 10);
    return g;
}

}  // namespace

TEST(Polylog, QuarterPoint) {
    const auto [re, im] = polylog_unimodular(2, X("0.25"));
    EXPECT_TRUE(near(re, -pi() * pi() / 48, X("1e-40")));
    EXPECT_TRUE(near(im, test::mpfr_catalan(), X("1e-40")));
    SeriesSpec spec;
    spec.kernel = Kernel::cos;
    spec.s = 2;
    spec.x = X("0.25");
    EXPECT_TRUE(near(re, closed_form_series(spec).value, active_config().abs_tol));
}

TEST(Polylog, HalfPoint) {
    const auto [re, im] = polylog_unimodular(2, X("0.5"));
    EXPECT_TRUE(near(re, -pi() * pi() / 12, X("1e-40")));
    EXPECT_TRUE(near(im, XReal(0), X("1e-40")));
}

TEST(Polylog, HigherOrderAgainstDirect) {
    SeriesSpec c;
    c.kernel = Kernel::cos;
    c.s = 4;
    c.x = X("0.3");
    const auto [re, im] = polylog_unimodular(4, X("0.3"));
    EXPECT_TRUE(near(re, direct_oracle(c, 100000).value, X("1e-12")));
    c.kernel = Kernel::sin;
    EXPECT_TRUE(near(im, direct_oracle(c, 100000).value, X("1e-12")));
}

TEST(Polylog, Errors) {
    EXPECT_THROW(polylog_unimodular(1, X("0.3")), CapabilityError);
    EXPECT_THROW(polylog_unimodular(2, XReal(0)), DomainError);
}

TEST(AltLogHarmonic, ClosedForm) {
    const XReal l2 = log2_const();
    EXPECT_TRUE(near(alternating_log_harmonic_sum(), l2 * l2 / 2 - test::mpfr_euler() * l2, X("1e-40")));
}

TEST(Registry, NamesAreSortedAndComplete) {
    const auto names = identity_names();
    EXPECT_EQ(names.size(), 15u);
    EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
    for (const char* n : {"entry17v", "cot_limit", "cos_limit", "alt_cos_limit", "alt_sin_limit", "bernoulli_odd",
                          "half_point_value", "deninger_log_cos", "zeta_dd_fourier", "log_cos_limit", "kummer_log_sin",
                          "even_exponent_sin", "adamchik_reflection", "alt_log_harmonic", "phi_gamma1_bridge"})
        EXPECT_NO_THROW(find_identity(n)) << n;
}

TEST(Registry, UnknownNameListsRegistry) {
    try {
        find_identity("nosuch");
        FAIL();
    } catch (const LookupError& e) {
        EXPECT_NE(std::string(e.what()).find("entry17v"), std::string::npos);
    }
}

TEST(Verify, CotLimitAtSixth) {
    const IdentityReport r = verify_identity("cot_limit", XReal(1) / 6);
    EXPECT_TRUE(r.pass) << r.method_notes;
    EXPECT_TRUE(near(r.rhs, boost::multiprecision::sqrt(XReal(3)) / 2, X("1e-40")));
    EXPECT_TRUE(near(r.lhs, boost::multiprecision::sqrt(XReal(3)) / 2, X("1e-10")));
}

TEST(Verify, DeningerAtHalf) {
    const IdentityReport r = verify_identity("deninger_log_cos", X("0.5"));
    EXPECT_TRUE(r.pass) << r.method_notes;
    const XReal l2 = log2_const();
    EXPECT_TRUE(near(r.rhs, test::mpfr_euler() * l2 - l2 * l2 / 2, X("1e-30")));
}

TEST(Verify, BernoulliExact) {
    const IdentityReport r = verify_identity("bernoulli_odd", XReal(1));
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.abs_residual, 0);
    EXPECT_EQ(r.tolerance, 0);
    for (int m = 0; m <= kBernoulliIdentityMaxM; ++m)
        EXPECT_EQ(verify_identity("bernoulli_odd", XReal(m)).abs_residual, 0) << m;
    EXPECT_THROW(verify_identity("bernoulli_odd", XReal(21)), DomainError);
    EXPECT_THROW(verify_identity("bernoulli_odd", X("1.5")), DomainError);
}

TEST(Verify, DomainErrors) {
    EXPECT_THROW(verify_identity("entry17v", XReal(0)), DomainError);
    EXPECT_THROW(verify_identity("entry17v", XReal(1)), DomainError);
    EXPECT_THROW(verify_identity("alt_sin_limit", X("0.5")), DomainError);
    EXPECT_THROW(verify_identity("nosuch", X("0.5")), LookupError);
}

TEST(Verify, ReportIntegrity) {
    for (const char* name : {"entry17v", "log_cos_limit", "even_exponent_sin"}) {
        const IdentityReport r = verify_identity(name, X("0.3"));
        EXPECT_EQ(r.pass, r.abs_residual <= r.tolerance) << name;
        EXPECT_TRUE(r.abs_residual >= 0);
        EXPECT_TRUE(r.rel_residual >= 0);
        EXPECT_TRUE(near(r.abs_residual, abs(r.lhs - r.rhs), XReal(0)));
        EXPECT_FALSE(r.method_notes.empty());
    }
}

TEST(Verify, ToleranceOverride) {
    const IdentityReport r = verify_identity("entry17v", X("0.3"), active_config(), XReal(0));
    EXPECT_EQ(r.tolerance, 0);
    EXPECT_EQ(r.pass, r.abs_residual == 0);
}

TEST(Entry17v, TwoRightHandRoutesAgree) {
    for (int i = 1; i <= 9; ++i) {
        const XReal x = XReal(i) / 10;
        EXPECT_TRUE(near(entry17v_rhs_series(x), entry17v_rhs_via_limit(x), X("1e-9"))) << i;
    }
}

TEST(HalfPoint, RoutesAgree) {
    const XReal want = (test::mpfr_euler() + boost::multiprecision::log(pi())) / pi();
    EXPECT_TRUE(near(half_point_series(ZetaPrimeRoute::substitution), want, X("1e-10")));
    EXPECT_TRUE(near(half_point_series(ZetaPrimeRoute::hurwitz), want, X("1e-10")));
}

TEST(Adamchik, PolylogFormMatchesHurwitz) {
    for (int m = 1; m <= 3; ++m) {
        for (const XReal& x : {X("0.25"), XReal(1) / 3}) {
            const XReal lhs = adamchik_lhs(m, x);
            const Complex rhs = adamchik_rhs(m, x);
            EXPECT_TRUE(near(lhs, rhs.re, X("1e-8"))) << m;
            EXPECT_TRUE(near(XReal(0), rhs.im, X("1e-8"))) << m;
        }
    }
}

TEST(Adamchik, HurwitzFormsMatchPolylog) {
    for (int m = 1; m <= 3; ++m) {
        for (const XReal& x : {X("0.25"), XReal(1) / 3}) {
            EXPECT_TRUE(near(even_sin_series_hurwitz(m, x), polylog_unimodular(2 * m, x).second, X("1e-8"))) << m;
            if (m >= 2)
                EXPECT_TRUE(near(integer_cos_series(x, XReal(2 * m - 1)).value, polylog_unimodular(2 * m - 1, x).first,
                                 X("1e-8")))
                    << m;
        }
    }
}

TEST(ZetaDDFourier, PrintedConstantIsFlaggedSuspect) {
    for (const char* t : {"0.25", "0.75"}) {
        const IdentityReport r = verify_identity("zeta_dd_fourier", X(t));
        EXPECT_FALSE(r.pass) << t;
        EXPECT_NE(r.method_notes.find("SUSPECT CONSTANT"), std::string::npos) << r.method_notes;
    }
}

TEST(ZetaDDFourier, DoubledConstantMatches) {
    // With 1/2 zeta(2) in place of the printed 1/4 zeta(2) the identity holds.
    for (const char* t : {"0.25", "0.5", "0.75"}) {
        const ZetaDDFourierSums S = zeta_dd_fourier_sums(X(t));
        const XReal lhs = zeta::hurwitz_zeta_deriv(2, XReal(0), X(t));
        EXPECT_TRUE(near(zeta_dd_fourier_rhs(S, X("0.5")), lhs, X("1e-5"))) << t;
    }
}

TEST(Suite, FullGridPassesExceptPrintedConstant) {
    const auto reports = run_suite(identity_names(), grid());
    ASSERT_FALSE(reports.empty());
    for (const auto& r : reports) {
        if (r.identity_name == "zeta_dd_fourier")
            continue;
        EXPECT_TRUE(r.pass) << r.identity_name << " at " << (r.inputs.empty() ? XReal(0) : r.inputs[0].second)
                            << ": " << r.method_notes;
    }
    EXPECT_TRUE(std::is_sorted(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
        return a.identity_name < b.identity_name;
    }));
}

TEST(Suite, Semantics) {
    EXPECT_TRUE(run_suite({"entry17v"}, {}).empty());
    EXPECT_EQ(run_suite({"half_point_value"}, grid()).size(), 1u);
    EXPECT_EQ(run_suite({"bernoulli_odd"}, {}).size(), static_cast<std::size_t>(kBernoulliIdentityMaxM + 1));
    const auto near_edge = run_suite({"cot_limit"}, {X("0.005")});
    ASSERT_EQ(near_edge.size(), 1u);
    EXPECT_NE(near_edge[0].method_notes.find("warning"), std::string::npos);
    EXPECT_THROW(run_suite({"cot_limit"}, {X("0.0001")}), DomainError);
    EXPECT_THROW(run_suite({"nosuch"}, grid()), LookupError);
}

TEST(Suite, DeterministicOrdering) {
    const std::vector<XReal> shuffled{X("0.7"), X("0.2"), X("0.5")};
    const auto a = run_suite({"log_cos_limit", "cot_limit"}, shuffled);
    const auto b = run_suite({"cot_limit", "log_cos_limit"}, {X("0.2"), X("0.5"), X("0.7")});
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].identity_name, b[i].identity_name);
        EXPECT_EQ(a[i].lhs, b[i].lhs);
        EXPECT_EQ(a[i].inputs[0].second, b[i].inputs[0].second);
    }
}
