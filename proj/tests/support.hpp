#ifndef REGSUM_TESTS_SUPPORT_HPP
#define REGSUM_TESTS_SUPPORT_HPP

#include "regsum/config.hpp"

#include <gtest/gtest.h>
#include <mpfr.h>

#include <random>
#include <string>

namespace regsum::test {

inline XReal X(const char* s) { return XReal(s); }

inline ::testing::AssertionResult near(const XReal& a, const XReal& b, const XReal& tol) {
    const XReal d = abs(a - b);
    if (d <= tol)
        return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << a.str(30) << " vs " << b.str(30) << ": |diff| = "
                                         << d.str(5) << " > " << tol.str(3);
}

// MPFR's own special functions, used only as independent oracles.
using MpfrUnary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

inline XReal mpfr_apply(MpfrUnary f, const XReal& x) {
    XReal r;
    f(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}
inline XReal mpfr_zeta_of(const XReal& s) { return mpfr_apply(mpfr_zeta, s); }
inline XReal mpfr_digamma_of(const XReal& x) { return mpfr_apply(mpfr_digamma, x); }
inline XReal mpfr_lgamma_of(const XReal& x) { return mpfr_apply(mpfr_lngamma, x); }
inline XReal mpfr_euler() {
    XReal r;
    mpfr_const_euler(r.backend().data(), MPFR_RNDN);
    return r;
}
inline XReal mpfr_catalan() {
    XReal r;
    mpfr_const_catalan(r.backend().data(), MPFR_RNDN);
    return r;
}

/// Fixed-seed uniform reals, reproducible across runs.
class Uniform {
public:
    Uniform(double lo, double hi, unsigned seed = 20240611) : gen_(seed), dist_(lo, hi) {}
    XReal operator()() { return XReal(dist_(gen_)); }

private:
    std::mt19937_64 gen_;
    std::uniform_real_distribution<double> dist_;
};

}  // namespace regsum::test

#endif  // REGSUM_TESTS_SUPPORT_HPP
