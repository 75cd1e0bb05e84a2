#ifndef REGSUM_ZETA_HPP
#define REGSUM_ZETA_HPP

// Riemann/Hurwitz zeta values and s-derivatives, Dirichlet eta, digamma and
// log-gamma.  Everything in s is obtained by differentiating the
// Euler-Maclaurin representation term by term with second-order jets, so
// derivatives never come from finite differences.

#include "regsum/bernoulli.hpp"
#include "regsum/config.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace regsum::zeta {

namespace detail {

/// Value and first two derivatives with respect to s.
struct Jet {
    XReal v{0};
    XReal d1{0};
    XReal d2{0};

    Jet& operator+=(const Jet& o) {
        v += o.v;
        d1 += o.d1;
        d2 += o.d2;
        return *this;
    }
    XReal magnitude() const { return std::max({abs(v), abs(d1), abs(d2)}); }
};

inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator*(const Jet& a, const Jet& b) {
    return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2 * a.d1 * b.d1 + a.v * b.d2};
}
inline Jet operator*(const XReal& c, const Jet& a) { return {c * a.v, c * a.d1, c * a.d2}; }

/// Jet of s -> exp(-(s + shift) * L), i.e. base^{-(s+shift)} with L = log(base).
inline Jet power_jet(const XReal& log_base, const XReal& s, int shift = 0) {
    XReal w = boost::multiprecision::exp(-(s + shift) * log_base);
    return {w, -log_base * w, log_base * log_base * w};
}

/// Jet of the linear factor s + c.
inline Jet linear_jet(const XReal& s, int c) { return {s + c, XReal(1), XReal(0)}; }

class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits) : saved_(XReal::default_precision()) {
        if (digits > saved_)
            XReal::default_precision(digits);
    }
    ~PrecisionGuard() { XReal::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

/// Jet in s of E(u) = ((N+a)^{-u} - 1)/u with u = s - 1; entire in u.
inline Jet pole_free_tail_jet(const XReal& u, const XReal& L, const XReal& eps) {
    if (abs(u * L) < XReal("0.5")) {
        // E(u) = sum_{k>=1} (-L)^k u^{k-1} / k!
        Jet e;
        XReal c = 1;  // (-L)^k / k!
        for (int k = 1; k < 2000; ++k) {
            c *= -L / k;
            e.v += c * boost::multiprecision::pow(u, k - 1);
            if (k >= 2)
                e.d1 += c * (k - 1) * boost::multiprecision::pow(u, k - 2);
            if (k >= 3)
                e.d2 += c * (k - 1) * (k - 2) * boost::multiprecision::pow(u, k - 3);
            if (k > 3 && abs(c) * k * k < eps)
                return e;
        }
        throw ConvergenceError("pole-free tail series did not converge");
    }
    XReal q = boost::multiprecision::exp(-u * L);
    Jet num{q - 1, -L * q, L * L * q};
    Jet inv{1 / u, -1 / (u * u), 2 / (u * u * u)};
    return num * inv;
}

struct EmJet {
    Jet jet;
    XReal truncation_bound;
};

/// Euler-Maclaurin jet of zeta(s,a), or of zeta(s,a) - 1/(s-1) when
/// `drop_pole` is set (valid at s = 1 as well).
inline EmJet hurwitz_em_jet(const XReal& s_in, const XReal& a_in, bool drop_pole) {
    using boost::multiprecision::ceil;
    using boost::multiprecision::log;
    using boost::multiprecision::log10;

    const int base_digits = working_digits();
    const XReal eps_target = working_epsilon();
    const XReal two_pi = 2 * pi();
    XReal n_real = ceil((base_digits * log(XReal(10)) + abs(s_in)) / two_pi) + 10;
    long N = n_real.convert_to<long>();

    for (int attempt = 0; attempt < 5; ++attempt, N *= 2) {
        unsigned digits = static_cast<unsigned>(base_digits);
        if (s_in < 0) {
            // sum_{n<N} (n+a)^{-s} cancels down to the size of the result.
            XReal extra = (1 - s_in) * log10(XReal(N) + a_in);
            digits += static_cast<unsigned>(ceil(extra).convert_to<long>()) + 5;
        }
        PrecisionGuard guard(digits);
        // Copies keep their source precision, so promote explicitly.
        const XReal s(s_in, digits);
        const XReal a(a_in, digits);

        Jet total;
        for (long n = 0; n < N; ++n)
            total += power_jet(log(XReal(n) + a), s);

        const XReal Na = XReal(N) + a;
        const XReal L = log(Na);
        const XReal u = s - 1;
        total += pole_free_tail_jet(u, L, eps_target * 1e-5);
        if (!drop_pole) {
            if (u == 0)
                throw PoleError("zeta(s,a) has a pole at s = 1");
            total += Jet{1 / u, -1 / (u * u), 2 / (u * u * u)};
        }
        total += XReal("0.5") * power_jet(L, s);

        // Bernoulli corrections B_{2j}/(2j)! * (s)_{2j-1} * (N+a)^{-s-2j+1}
        Jet rising = linear_jet(s, 0);
        XReal inv_fact = 1;  // 1/(2j)!
        XReal prev = infinity();
        bool converged = false;
        XReal last(0);
        for (int j = 1; 2 * j <= kMaxBernoulliIndex; ++j) {
            if (j > 1)
                rising = rising * linear_jet(s, 2 * j - 3) * linear_jet(s, 2 * j - 2);
            inv_fact /= XReal((2 * j - 1) * (2 * j));
            Jet term = (bernoulli_real(2 * j) * inv_fact) * (rising * power_jet(L, s, 2 * j - 1));
            total += term;
            XReal mag = term.magnitude();
            // Stop only past the polynomial part, once the head has cancelled.
            XReal scale = std::max(XReal(1), total.magnitude());
            if (s + 2 * j - 1 > 0 && mag < eps_target * scale) {
                converged = true;
                last = mag;
                break;
            }
            // Past the polynomial part the corrections must shrink.
            if (s + 2 * j - 1 > 2 && mag > prev && mag > eps_target * scale)
                break;
            prev = mag;
        }
        if (converged) {
            XReal scale = std::max(XReal(1), total.magnitude());
            return {total, 2 * last + 10 * eps_target * scale};
        }
    }
    throw ConvergenceError("Euler-Maclaurin for zeta(s,a) did not converge");
}

struct ConstantCache {
    std::mutex mutex;
    std::map<unsigned, XReal> euler_gamma;
};

inline ConstantCache& constant_cache() {
    static ConstantCache cache;
    return cache;
}

}  // namespace detail

/// Euler's constant, from the regular part of zeta(s,1) at s = 1.
/// Computed once per working precision.
inline XReal euler_gamma() {
    auto& cache = detail::constant_cache();
    const unsigned prec = XReal::default_precision();
    {
        std::lock_guard lock(cache.mutex);
        auto it = cache.euler_gamma.find(prec);
        if (it != cache.euler_gamma.end())
            return it->second;
    }
    XReal g = detail::hurwitz_em_jet(XReal(1), XReal(1), true).jet.v;
    std::lock_guard lock(cache.mutex);
    cache.euler_gamma.emplace(prec, g);
    return g;
}

inline XReal log_two_pi() { return boost::multiprecision::log(2 * pi()); }

/// d^k/ds^k zeta(s, a) for k in {0, 1, 2}.
inline XReal hurwitz_zeta_deriv(int k, const XReal& s, const XReal& a) {
    if (k < 0 || k > 2)
        throw DomainError("hurwitz_zeta_deriv: k must be 0, 1 or 2");
    if (!(a > 0))
        throw DomainError("hurwitz_zeta_deriv: a must be positive");
    if (s == 1)
        throw PoleError("hurwitz_zeta_deriv: pole at s = 1");
    detail::Jet j;
    const XReal u = s - 1;
    if (abs(u) < XReal("0.1")) {
        // Laurent route: exact pole plus analytic regular part.
        j = detail::hurwitz_em_jet(s, a, true).jet;
        j += detail::Jet{1 / u, -1 / (u * u), 2 / (u * u * u)};
    } else {
        j = detail::hurwitz_em_jet(s, a, false).jet;
    }
    return k == 0 ? j.v : (k == 1 ? j.d1 : j.d2);
}

// ---------------------------------------------------------------------------
// Gamma family
// ---------------------------------------------------------------------------

namespace detail {
inline XReal asymptotic_shift_point() { return XReal(working_digits() / 2 + 10); }
}  // namespace detail

/// log Gamma(x) for x > 0: upward shift then Stirling's series.
inline XReal log_gamma(const XReal& x) {
    using boost::multiprecision::log;
    if (!(x > 0))
        throw DomainError("log_gamma: x must be positive");
    const XReal x0 = detail::asymptotic_shift_point();
    XReal z = x;
    XReal prod = 1;
    while (z < x0) {
        prod *= z;
        z += 1;
    }
    const XReal eps = working_epsilon();
    XReal r = (z - XReal("0.5")) * log(z) - z + log_two_pi() / 2;
    XReal zpow = z;
    const XReal z2 = z * z;
    for (int k = 1; 2 * k <= kMaxBernoulliIndex; ++k) {
        XReal t = bernoulli_real(2 * k) / (XReal(2 * k) * (2 * k - 1) * zpow);
        r += t;
        if (abs(t) < eps * std::max(XReal(1), abs(r)))
            break;
        zpow *= z2;
    }
    return r - log(prod);
}

/// Gamma(x) for real x away from the non-positive integers.
inline XReal gamma_fn(const XReal& x) {
    if (x <= 0 && is_integer(x))
        throw PoleError("gamma: pole at non-positive integer");
    if (x > 0)
        return boost::multiprecision::exp(log_gamma(x));
    // reflection
    return pi() / (boost::multiprecision::sin(pi() * x) * gamma_fn(1 - x));
}

/// psi(x): upward recurrence then the asymptotic series; reflection for x < 0.
inline XReal digamma(const XReal& x) {
    using boost::multiprecision::log;
    if (x <= 0 && is_integer(x))
        throw PoleError("digamma: pole at non-positive integer");
    if (x < 0) {
        const XReal px = pi() * x;
        return digamma(1 - x) - pi() * boost::multiprecision::cos(px) / boost::multiprecision::sin(px);
    }
    const XReal x0 = detail::asymptotic_shift_point();
    XReal z = x;
    XReal shift_sum = 0;
    while (z < x0) {
        shift_sum += 1 / z;
        z += 1;
    }
    const XReal eps = working_epsilon();
    XReal r = log(z) - 1 / (2 * z);
    const XReal z2 = z * z;
    XReal zpow = z2;
    for (int k = 1; 2 * k <= kMaxBernoulliIndex; ++k) {
        XReal t = bernoulli_real(2 * k) / (XReal(2 * k) * zpow);
        r -= t;
        if (abs(t) < eps * std::max(XReal(1), abs(r)))
            break;
        zpow *= z2;
    }
    return r - shift_sum;
}

// ---------------------------------------------------------------------------
// Riemann zeta and relatives
// ---------------------------------------------------------------------------

/// zeta(s) for real s != 1.
inline XReal riemann_zeta(const XReal& s) {
    using boost::multiprecision::pow;
    using boost::multiprecision::sin;
    if (s == 1)
        throw PoleError("riemann_zeta: pole at s = 1");
    if (s < 0) {
        if (is_integer(s)) {
            const long m = (-s).convert_to<long>();
            if (m % 2 == 0)
                return XReal(0);
            if (m + 1 <= kMaxBernoulliIndex)
                return -bernoulli_real(static_cast<int>(m + 1)) / XReal(m + 1);
        }
        // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
        return pow(XReal(2), s) * pow(pi(), s - 1) * sin(pi() * s / 2) * gamma_fn(1 - s) *
               riemann_zeta(1 - s);
    }
    return hurwitz_zeta_deriv(0, s, XReal(1));
}

/// Dirichlet eta: (1 - 2^{1-s}) zeta(s), with eta(1) = log 2.
inline XReal eta(const XReal& s) {
    if (s == 1)
        return log2_const();
    const XReal factor = -expm1((1 - s) * log2_const());
    if (s < 0 && is_integer(s) && (-s).convert_to<long>() % 2 == 0)
        return XReal(0);
    return factor * riemann_zeta(s);
}

inline XReal zeta_prime_at_zero() { return -log_two_pi() / 2; }

inline XReal harmonic_number(int n) {
    XReal h = 0;
    for (int i = 1; i <= n; ++i)
        h += XReal(1) / i;
    return h;
}

/// zeta'(-j) for j >= 1.  Even j = 2n: (-1)^n (2n)!/(2 (2pi)^{2n}) zeta(2n+1).
/// Odd j = 2k-1: 2k zeta'(1-2k) = B_{2k} [zeta'(2k)/zeta(2k) + H_{2k-1} - gamma - log 2pi].
inline XReal zeta_sderiv_at_negatives(int j) {
    using boost::multiprecision::pow;
    if (j < 1)
        throw DomainError("zeta_sderiv_at_negatives: j must be >= 1 (use zeta_prime_at_zero)");
    const XReal two_pi = 2 * pi();
    if (j % 2 == 0) {
        const int n = j / 2;
        XReal fact = 1;
        for (int i = 2; i <= 2 * n; ++i)
            fact *= i;
        XReal sign = (n % 2 == 0) ? 1 : -1;
        return sign * fact / (2 * pow(two_pi, 2 * n)) * riemann_zeta(XReal(2 * n + 1));
    }
    const int k = (j + 1) / 2;
    const XReal s2k(2 * k);
    const XReal z2k = riemann_zeta(s2k);
    const XReal dz2k = hurwitz_zeta_deriv(1, s2k, XReal(1));
    XReal b2k;
    if (2 * k <= kMaxBernoulliIndex) {
        b2k = bernoulli_real(2 * k);
    } else {
        // Euler: B_{2k} = (-1)^{k+1} 2 (2k)! zeta(2k) / (2pi)^{2k}
        XReal fact = 1;
        for (int i = 2; i <= 2 * k; ++i)
            fact *= i;
        b2k = ((k % 2 == 1) ? 2 : -2) * fact * z2k / pow(two_pi, 2 * k);
    }
    const XReal bracket = dz2k / z2k + harmonic_number(2 * k - 1) - euler_gamma() - log_two_pi();
    return b2k / s2k * bracket;
}

/// zeta'(-j) straight from the differentiated Euler-Maclaurin sum.
inline XReal zeta_sderiv_at_negatives_hurwitz(int j) {
    if (j < 1)
        throw DomainError("zeta_sderiv_at_negatives_hurwitz: j must be >= 1");
    return hurwitz_zeta_deriv(1, XReal(-j), XReal(1));
}

}  // namespace regsum::zeta

#endif  // REGSUM_ZETA_HPP
