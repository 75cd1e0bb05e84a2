// Acceptance run: one PASS/FAIL line per criterion, tolerances fixed below.
// Exit status is 0 when every criterion passes or fails only where listed in
// kKnownUnattainable (printed with its reason); 1 otherwise.

#include "regsum/regsum.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace regsum;
using boost::multiprecision::cos;
using boost::multiprecision::log;
using boost::multiprecision::pow;
using boost::multiprecision::sin;

namespace {

const XReal kTol10("1e-10");
const XReal kTol8("1e-8");
const XReal kTol6("1e-6");
const XReal kTol5("1e-5");

// Criteria expected to fail, with the reason printed next to the FAIL line.
const std::map<int, std::string> kKnownUnattainable = {
    {2, "at x = 1/2 the alternating cosine series is -sum 1, which has no Abel limit; "
        "its regularized value 1/2 is confirmed by the closed route only"},
    {10, "the Fourier form of zeta''(0,t) holds with 1/2 zeta(2), not the stated 1/4 zeta(2); "
         "the stated constant is reported as suspect instead of being adjusted"},
};

std::string sci(const XReal& v) { return v.str(3, std::ios_base::scientific); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    // Records |a - b| <= tol; keeps the worst residual per label.
    void check(const std::string& label, const XReal& a, const XReal& b, const XReal& tol) {
        const XReal r = abs(a - b);
        auto it = worst.find(label);
        if (it == worst.end())
            order.push_back(label), worst[label] = {r, tol};
        else if (r > it->second.first)
            it->second.first = r;
        if (!(r <= tol))
            pass = false;
    }
    std::string summary() const {
        std::string s;
        for (const auto& label : order) {
            const auto& [r, tol] = worst.at(label);
            s += (s.empty() ? "" : "; ") + label + " max " + sci(r) + " (tol " + sci(tol) + ")";
        }
        const std::string extra = detail.str();
        return extra.empty() ? s : s + "; " + extra;
    }

private:
    std::map<std::string, std::pair<XReal, XReal>> worst;
    std::vector<std::string> order;
};

std::vector<XReal> grid() {
    std::vector<XReal> g;
    for (int i = 1; i <= 9; ++i)
        g.push_back(XReal(i) / 10);
    return g;
}

SeriesSpec spec(Kernel k, bool alt, const XReal& s, const XReal& x, Weight w = Weight::unit) {
    SeriesSpec sp;
    sp.kernel = k;
    sp.alternating = alt;
    sp.weight = w;
    sp.s = s;
    sp.x = x;
    return sp;
}

XReal euler_mpfr() {
    XReal r;
    mpfr_const_euler(r.backend().data(), MPFR_RNDN);
    return r;
}

XReal catalan_mpfr() {
    XReal r;
    mpfr_const_catalan(r.backend().data(), MPFR_RNDN);
    return r;
}

XReal digamma_mpfr(const XReal& x) {
    XReal r;
    mpfr_digamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}

void criterion1(Outcome& o) {
    for (const XReal& x : grid()) {
        const XReal want = cos(pi() * x) / sin(pi() * x) / 2;
        const SeriesSpec sp = spec(Kernel::sin, false, XReal(0), x);
        o.check("power series", regularized_limit(sp).value, want, kTol10);
        o.check("Abel", abel_oracle(sp).value, want, kTol6);
    }
}

void criterion2(Outcome& o) {
    for (const XReal& x : grid()) {
        for (bool alt : {false, true}) {
            const SeriesSpec sp = spec(Kernel::cos, alt, XReal(0), x);
            const XReal want = alt ? XReal("0.5") : XReal("-0.5");
            const std::string tag = alt ? "alt-cos" : "cos";
            o.check(tag + " closed", regularized_limit(sp).value, want, kTol10);
            o.check(tag + " Abel", abel_oracle(sp).value, want, kTol6);
        }
    }
}

void criterion3(Outcome& o) {
    for (const XReal& x : grid()) {
        const XReal lhs = zeta::stieltjes_gamma1_limit(1 - x) - zeta::stieltjes_gamma1_limit(x);
        o.check("gamma1 limit vs zeta' series", lhs, entry17v_rhs_series(x), kTol8);
    }
}

void criterion4(Outcome& o) {
    const XReal want = (euler_mpfr() + log(pi())) / pi();
    const XReal sub = half_point_series(ZetaPrimeRoute::substitution);
    const XReal hur = half_point_series(ZetaPrimeRoute::hurwitz);
    o.check("substitution route", sub, want, kTol10);
    o.check("Hurwitz route", hur, want, kTol10);
    o.check("route agreement", sub, hur, kTol10);
}

void criterion5(Outcome& o) {
    for (const XReal& t : grid()) {
        const XReal den_rhs = deninger_rhs(t);
        const XReal kum_rhs = kummer_rhs(t);
        o.check("Deninger Abel", abel_oracle(spec(Kernel::cos, false, XReal(1), t, Weight::log)).value, den_rhs,
                kTol5);
        o.check("Kummer Abel", abel_oracle(spec(Kernel::sin, false, XReal(1), t, Weight::log)).value, kum_rhs,
                kTol5);
        o.check("Kummer closed lhs", log_sin_series_at_one(t).value, kum_rhs, kTol8);
    }
    const XReal l2 = log2_const();
    const XReal half_value = euler_mpfr() * l2 - l2 * l2 / 2;
    o.check("Deninger t=1/2 rhs", deninger_rhs(XReal("0.5")), half_value, kTol8);
    o.check("Deninger t=1/2 Abel", abel_oracle(spec(Kernel::cos, false, XReal(1), XReal("0.5"), Weight::log)).value,
            half_value, kTol5);
    o.detail << "Deninger has no closed-form lhs route here (Abel only)";
}

void criterion6(Outcome& o) {
    int exact = 0;
    for (int m = 0; m <= kBernoulliIdentityMaxM; ++m) {
        const IdentityReport r = verify_identity("bernoulli_odd", XReal(m));
        o.check("odd and even expansions", r.lhs, r.rhs, XReal(0));
        exact += r.abs_residual == 0;
    }
    o.detail << exact << "/" << kBernoulliIdentityMaxM + 1 << " m exact";
}

void criterion7(Outcome& o) {
    const XReal q("0.25");
    const long N = 200000;
    // The s = 1 sawtooth converges only conditionally: at x = 1/4 it is the
    // Leibniz series 1 - 1/3 + 1/5 - ..., summed with the last two partial sums averaged.
    long double acc = 0, avg = 0;
    const long K = 2000000;
    for (long k = 0; k < K; ++k) {
        acc += (k % 2 == 0 ? 1.0L : -1.0L) / (2 * k + 1);
        if (k >= K - 2)
            avg += acc / 2;
    }
    o.check("sawtooth closed vs pi/4", integer_sin_series(q, XReal(1)).value, pi() / 4, kTol8);
    o.check("sawtooth direct", XReal(avg), pi() / 4, kTol8);

    const XReal cube = integer_sin_series(q, XReal(3)).value;
    o.check("s=3 closed vs pi^3/32", cube, pi() * pi() * pi() / 32, kTol8);
    o.check("s=3 direct", direct_oracle(spec(Kernel::sin, false, XReal(3), q), N).value, cube, kTol8);

    const XReal cat = integer_sin_series(q, XReal(2)).value;
    const XReal direct2 = direct_oracle(spec(Kernel::sin, false, XReal(2), q), N).value;
    o.check("s=2 even-exponent form vs direct", cat, direct2, kTol8);
    o.check("s=2 even-exponent form vs Catalan", cat, catalan_mpfr(), kTol8);

    // The stated bracket carries +gamma; with it the m = 1 value moves by 2 gamma y.
    const XReal y = 2 * pi() * q;
    const XReal printed = cat - 2 * euler_mpfr() * y;
    o.detail << "bracket with +gamma would leave residual " << sci(abs(printed - catalan_mpfr()))
             << " (-gamma used)";
}

void criterion8(Outcome& o) {
    for (int m = 1; m <= 3; ++m) {
        for (const XReal& x : {XReal("0.25"), XReal(1) / 3}) {
            const XReal hurwitz = adamchik_lhs(m, x);
            const Complex polylog_form = adamchik_rhs(m, x);
            o.check("polylog form vs Hurwitz (re)", polylog_form.re, hurwitz, kTol8);
            o.check("polylog form vs Hurwitz (im)", polylog_form.im, XReal(0), kTol8);
            const auto [li_re, li_im] = polylog_unimodular(m + 1, x);
            if (m % 2 == 1)
                o.check("Trickovic sine form vs polylog", even_sin_series_hurwitz((m + 1) / 2, x), li_im, kTol8);
            else
                o.check("Trickovic cosine form vs polylog", integer_cos_series(x, XReal(m + 1)).value, li_re, kTol8);
        }
    }
}

void criterion9(Outcome& o) {
    const XReal abs_tol = active_config().abs_tol;
    std::mt19937_64 gen(97);
    std::uniform_real_distribution<double> dist(0.05, 3.95);
    for (int i = 0; i < 10; ++i) {
        const XReal s(dist(gen));
        const XReal x("0.3");
        o.check("sin prefactor forms", sin_prefactor(s, x), sin_prefactor_gamma_form(s, x), abs_tol);
        o.check("cos prefactor forms", cos_prefactor(s, x), cos_prefactor_gamma_form(s, x), abs_tol);
    }
    const XReal h("1e-12");
    for (const char* s : {"2.5", "3.5"}) {
        for (const XReal& x : grid()) {
            const XReal sv(s);
            const XReal d = (closed_form_series(spec(Kernel::sin, false, sv, x + h)).value -
                             closed_form_series(spec(Kernel::sin, false, sv, x - h)).value) /
                            (2 * h);
            o.check("d/dx sin = 2 pi cos(s-1)", d, 2 * pi() * closed_form_series(spec(Kernel::cos, false, sv - 1, x)).value,
                    kTol6);
        }
    }
    for (const XReal& x : grid())
        o.check("gamma0 = -psi", zeta::laurent_coeffs(x).gamma0, -digamma_mpfr(x), kTol10);
}

void criterion10(Outcome& o) {
    for (const char* t : {"0.25", "0.5", "0.75"}) {
        const XReal tv(t);
        const ZetaDDFourierSums S = zeta_dd_fourier_sums(tv);
        const XReal lhs = zeta::hurwitz_zeta_deriv(2, XReal(0), tv);
        o.check("stated 1/4 zeta(2)", zeta_dd_fourier_rhs(S, XReal("0.25")), lhs, kTol5);
        o.check("1/2 zeta(2) for comparison", zeta_dd_fourier_rhs(S, XReal("0.5")), lhs, XReal(1));
    }
    if (!o.pass)
        o.detail << "SUSPECT CONSTANT flagged";
}

}  // namespace

int main() {
    configure(EvalConfig{});
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"cot limit: power series 1e-10, Abel 1e-6", criterion1},
        {"constant cos / alt-cos limits: closed 1e-10, Abel 1e-6", criterion2},
        {"gamma1(1-x) - gamma1(x) vs zeta'(-2n-1) series: 1e-8", criterion3},
        {"half-point value, two zeta' routes: 1e-10", criterion4},
        {"Deninger / Kummer: Abel 1e-5, closed 1e-8", criterion5},
        {"Bernoulli expansions exact for m <= 20", criterion6},
        {"integer-exponent sums pi/4, pi^3/32, Catalan: 1e-8", criterion7},
        {"Adamchik / Trickovic reflection: 1e-8", criterion8},
        {"prefactors (abs_tol), d/dx link 1e-6, gamma0 = -psi 1e-10", criterion9},
        {"zeta''(0,t) Fourier form, stated constant: 1e-5", criterion10},
    };
    int unexpected = 0, passed = 0, known_failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "error: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2d: %s  %s [%s] (%.1fs)\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.summary().c_str(), secs);
        if (o.pass) {
            ++passed;
        } else if (auto known = kKnownUnattainable.find(id); known != kKnownUnattainable.end()) {
            std::printf("              known unattainable: %s\n", known->second.c_str());
            ++known_failed;
        } else {
            ++unexpected;
        }
        std::fflush(stdout);
    }
    std::printf("acceptance: %d/%zu passed, %d known unattainable, %d unexpected failure(s)\n", passed,
                criteria.size(), known_failed, unexpected);
    return unexpected == 0 ? 0 : 1;
}
