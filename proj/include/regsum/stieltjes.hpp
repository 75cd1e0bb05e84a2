#ifndef REGSUM_STIELTJES_HPP
#define REGSUM_STIELTJES_HPP

#include "regsum/summation.hpp"
#include "regsum/zeta.hpp"

#include <array>

namespace regsum::zeta {

/// gamma_0(a) and gamma_1(a): the first two Laurent coefficients of zeta(s,a)
/// about s = 1, zeta(s,a) = 1/(s-1) + gamma0 - gamma1 (s-1) + ...
struct LaurentCoeffs {
    XReal gamma0;
    XReal gamma1;
    XReal at_point;
    std::array<XReal, 2> error_estimates;
};

inline LaurentCoeffs laurent_coeffs(const XReal& a) {
    if (!(a > 0))
        throw DomainError("laurent_coeffs: a must be positive");
    auto em = detail::hurwitz_em_jet(XReal(1), a, true);
    return {em.jet.v, -em.jet.d1, a, {em.truncation_bound, em.truncation_bound}};
}

/// Generalised Stieltjes constant gamma_1(x) = -d/ds [zeta(s,x) - 1/(s-1)] at s = 1.
inline XReal stieltjes_gamma1(const XReal& x) {
    if (!(x > 0))
        throw DomainError("stieltjes_gamma1: x must be positive");
    return laurent_coeffs(x).gamma1;
}

namespace detail {

/// m-th derivative of f(u) = log(u)/u: (-1)^m m! (log u - H_m) / u^{m+1}.
inline XReal log_over_u_derivative(int m, const XReal& u, const XReal& log_u) {
    XReal fact = 1;
    for (int i = 2; i <= m; ++i)
        fact *= i;
    XReal r = fact * (log_u - harmonic_number(m)) / boost::multiprecision::pow(u, m + 1);
    return (m % 2 == 0) ? r : XReal(-r);
}

}  // namespace detail

/// gamma_1(x) = lim_N [sum_{k=0}^{N} log(k+x)/(k+x) - log^2(N+x)/2], with the
/// Euler-Maclaurin remainder at the far end subtracted so the limit is
/// reached at moderate N.  Independent of the jet-based engine route.
inline XReal stieltjes_gamma1_limit(const XReal& x, long N = 1000) {
    using boost::multiprecision::log;
    if (!(x > 0))
        throw DomainError("stieltjes_gamma1_limit: x must be positive");
    if (N < 100)
        throw DomainError("stieltjes_gamma1_limit: N must be >= 100");
    CompensatedSum<XReal> acc;
    for (long k = 0; k <= N; ++k) {
        const XReal u = XReal(k) + x;
        acc.add(log(u) / u);
    }
    const XReal u = XReal(N) + x;
    const XReal lu = log(u);
    XReal r = acc.value() - lu * lu / 2 - lu / (2 * u);
    XReal inv_fact = 1;
    const XReal eps = working_epsilon();
    for (int j = 1; 2 * j <= kMaxBernoulliIndex; ++j) {
        inv_fact /= XReal((2 * j - 1) * (2 * j));
        XReal t = bernoulli_real(2 * j) * inv_fact * detail::log_over_u_derivative(2 * j - 1, u, lu);
        r -= t;
        if (abs(t) < eps)
            break;
    }
    return r;
}

/// phi(x) = sum_{n>=1} [log n / n - log(n+x)/(n+x)], x > -1.
inline XReal phi_ramanujan(const XReal& x) {
    using boost::multiprecision::log;
    if (!(x > -1))
        throw DomainError("phi_ramanujan: x must be > -1");
    if (x == 0)
        return XReal(0);
    const long N = 40 + static_cast<long>(working_digits());
    CompensatedSum<XReal> acc;
    for (long n = 2; n < N; ++n) {
        const XReal un = XReal(n);
        acc.add(log(un) / un);
    }
    for (long n = 1; n < N; ++n) {
        const XReal un = XReal(n) + x;
        acc.add(-log(un) / un);
    }
    // tail sum_{n>=N} g(n), g(u) = f(u) - f(u+x), by Euler-Maclaurin at the lower end
    const XReal a = XReal(N);
    const XReal b = a + x;
    const XReal la = log(a), lb = log(b);
    XReal tail = (lb * lb - la * la) / 2 + (la / a - lb / b) / 2;
    XReal inv_fact = 1;
    const XReal eps = working_epsilon();
    for (int j = 1; 2 * j <= kMaxBernoulliIndex; ++j) {
        inv_fact /= XReal((2 * j - 1) * (2 * j));
        XReal g = detail::log_over_u_derivative(2 * j - 1, a, la) -
                  detail::log_over_u_derivative(2 * j - 1, b, lb);
        XReal t = bernoulli_real(2 * j) * inv_fact * g;
        tail -= t;
        if (abs(t) < eps)
            break;
    }
    acc.add(tail);
    return acc.value();
}

/// int_1^t gamma_n(x) dx = ((-1)^{n+1}/(n+1)) [zeta^{(n+1)}(0,t) - zeta^{(n+1)}(0)], n in {0,1}.
inline XReal stieltjes_integral(int n, const XReal& t) {
    if (n != 0 && n != 1)
        throw DomainError("stieltjes_integral: n must be 0 or 1");
    if (!(t > 0))
        throw DomainError("stieltjes_integral: t must be positive");
    const XReal diff = hurwitz_zeta_deriv(n + 1, XReal(0), t) - hurwitz_zeta_deriv(n + 1, XReal(0), XReal(1));
    return n == 0 ? XReal(-diff) : XReal(diff / 2);
}

}  // namespace regsum::zeta

#endif  // REGSUM_STIELTJES_HPP
