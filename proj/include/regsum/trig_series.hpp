#ifndef REGSUM_TRIG_SERIES_HPP
#define REGSUM_TRIG_SERIES_HPP

// Trigonometric Dirichlet series
//
//     sum_{n>=1} [(-1)^{n+1}] w(n) {sin|cos}(2 n pi x) / n^s,   0 < x < 1,
//
// for unit and log weights: closed forms for s > 0, analytic-continuation
// limits at s = 0, and the integer-exponent branches.

#include "regsum/bernoulli.hpp"
#include "regsum/config.hpp"
#include "regsum/summation.hpp"
#include "regsum/zeta.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace regsum {

enum class Kernel { sin, cos };
enum class Weight { unit, log, log2 };
enum class Method { closed_form, abel, direct, integer_branch };

inline const char* to_string(Kernel k) { return k == Kernel::sin ? "sin" : "cos"; }

inline const char* to_string(Weight w) {
    switch (w) {
        case Weight::unit: return "unit";
        case Weight::log: return "log";
        case Weight::log2: return "log2";
    }
    return "?";
}

inline const char* to_string(Method m) {
    switch (m) {
        case Method::closed_form: return "closed_form";
        case Method::abel: return "abel";
        case Method::direct: return "direct";
        case Method::integer_branch: return "integer_branch";
    }
    return "?";
}

struct SeriesSpec {
    Kernel kernel = Kernel::sin;
    bool alternating = false;
    Weight weight = Weight::unit;
    XReal x{"0.25"};
    XReal s{0};

    void validate() const {
        if (!(x > 0) || !(x < 1))
            throw DomainError("series argument x must lie strictly inside (0, 1)");
        if (s < 0)
            throw DomainError("series exponent s must be >= 0");
    }

    std::string label() const {
        std::string l = alternating ? "alt-" : "";
        l += to_string(kernel);
        if (weight != Weight::unit)
            l += std::string("/") + to_string(weight);
        return l;
    }
};

struct RegularizedValue {
    XReal value{0};
    Method method = Method::closed_form;
    XReal error_estimate{0};
    std::size_t terms_used = 0;
    std::vector<std::string> diagnostics;
};

namespace detail {

inline XReal factorial(int n) {
    XReal f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

inline XReal cot_pi(const XReal& x) {
    const XReal a = pi() * x;
    return boost::multiprecision::cos(a) / boost::multiprecision::sin(a);
}

/// Per-precision memo of an integer-indexed sequence of constants.
class SequenceCache {
public:
    using Fn = std::function<XReal(int)>;

    XReal get(int tag, int n, const Fn& fn) {
        const Key key{tag, XReal::default_precision()};
        {
            std::lock_guard lock(mutex_);
            auto& seq = values_[key];
            if (auto it = seq.find(n); it != seq.end())
                return it->second;
        }
        XReal v = fn(n);
        std::lock_guard lock(mutex_);
        values_[key].emplace(n, v);
        return v;
    }

private:
    using Key = std::pair<int, unsigned>;
    std::mutex mutex_;
    std::map<Key, std::map<int, XReal>> values_;
};

inline SequenceCache& sequence_cache() {
    static SequenceCache cache;
    return cache;
}

enum CacheTag : int { kZetaPrimeOdd = 1, kZetaPrimeEven = 2 };

}  // namespace detail

/// zeta'(-2n-1), n >= 0, through the substitution formula (memoized).
inline XReal zeta_prime_negative_odd(int n) {
    return detail::sequence_cache().get(detail::kZetaPrimeOdd, n,
                                        [](int k) { return zeta::zeta_sderiv_at_negatives(2 * k + 1); });
}

/// zeta'(-2n), n >= 0 (memoized); n = 0 gives -log(2 pi)/2.
inline XReal zeta_prime_negative_even(int n) {
    return detail::sequence_cache().get(detail::kZetaPrimeEven, n, [](int k) {
        return k == 0 ? zeta::zeta_prime_at_zero() : zeta::zeta_sderiv_at_negatives(2 * k);
    });
}

// ---------------------------------------------------------------------------
// Prefactors of the closed forms.  Two algebraically equivalent shapes each.
// ---------------------------------------------------------------------------

/// pi (2 pi x)^{s-1} / (2 Gamma(s) sin(pi s/2)).
inline XReal sin_prefactor(const XReal& s, const XReal& x) {
    using boost::multiprecision::pow;
    return pi() * pow(2 * pi() * x, s - 1) /
           (2 * zeta::gamma_fn(s) * boost::multiprecision::sin(pi() * s / 2));
}

/// (2 pi x)^{s-1} Gamma(1 + s/2) Gamma(1 - s/2) / Gamma(1 + s).
inline XReal sin_prefactor_gamma_form(const XReal& s, const XReal& x) {
    using boost::multiprecision::pow;
    return pow(2 * pi() * x, s - 1) * zeta::gamma_fn(1 + s / 2) * zeta::gamma_fn(1 - s / 2) /
           zeta::gamma_fn(1 + s);
}

/// pi (2 pi x)^{s-1} / (2 Gamma(s) cos(pi s/2)).
inline XReal cos_prefactor(const XReal& s, const XReal& x) {
    using boost::multiprecision::pow;
    return pi() * pow(2 * pi() * x, s - 1) /
           (2 * zeta::gamma_fn(s) * boost::multiprecision::cos(pi() * s / 2));
}

/// (2 pi x)^{s-1} Gamma((1+s)/2) Gamma((1-s)/2) / (2 Gamma(s)).
inline XReal cos_prefactor_gamma_form(const XReal& s, const XReal& x) {
    using boost::multiprecision::pow;
    return pow(2 * pi() * x, s - 1) * zeta::gamma_fn((1 + s) / 2) * zeta::gamma_fn((1 - s) / 2) /
           (2 * zeta::gamma_fn(s));
}

namespace detail {

/// sum_k (-1)^k c(j) (2 pi x)^j / j!, j = 2k + offset.
template <class CoeffFn>
SumResult power_tail(CoeffFn&& coeff, int offset, const XReal& x, const EvalConfig& cfg) {
    const XReal y = 2 * pi() * x;
    XReal pw = offset == 0 ? XReal(1) : y;  // y^j / j!
    auto term = [&](std::size_t k) -> XReal {
        const int j = 2 * static_cast<int>(k) + offset;
        if (k > 0)
            pw *= y * y / XReal((j - 1) * j);
        XReal c = coeff(j);
        return (k % 2 == 0) ? XReal(c * pw) : XReal(-c * pw);
    };
    return sum_entire(term, cfg);
}

/// Singular exponents of the non-alternating closed forms: even s for sin, odd s for cos.
inline bool parity_singular(Kernel k, const XReal& s) {
    if (!is_integer(s))
        return false;
    const long n = s.convert_to<long>();
    return k == Kernel::sin ? (n % 2 == 0) : (n % 2 != 0);
}

inline void near_integer_warning(Kernel k, const XReal& s, std::vector<std::string>& diag) {
    if (is_integer(s))
        return;
    const XReal nearest = boost::multiprecision::round(s);
    if (!parity_singular(k, nearest) || nearest <= 0)
        return;
    const XReal dist = abs(s - nearest);
    if (dist < XReal("1e-3")) {
        const long lost = (-boost::multiprecision::log10(dist)).convert_to<long>();
        diag.push_back("warning: s is within 1e-3 of a singular exponent; prefactor cancellation loses about " +
                       std::to_string(lost) + " digits");
    }
}

/// x > 3/4 is mapped to 1 - x (sin is odd, cos even under the map) to keep
/// the power series well inside their disc of convergence.
struct Reflected {
    XReal x;
    int sign = 1;
    bool reflected = false;
};

inline Reflected reflect_high(Kernel k, const XReal& x) {
    if (x > XReal("0.75"))
        return {1 - x, k == Kernel::sin ? -1 : 1, true};
    return {x, 1, false};
}

inline RegularizedValue non_alternating_closed_form(Kernel k, const XReal& s, const XReal& x_in,
                                                    const EvalConfig& cfg) {
    RegularizedValue out;
    const Reflected r = reflect_high(k, x_in);
    if (r.reflected)
        out.diagnostics.push_back("evaluated at 1-x by parity");
    const int offset = k == Kernel::sin ? 1 : 0;
    auto coeff = [&](int j) { return zeta::riemann_zeta(s - j); };
    SumResult tail = power_tail(coeff, offset, r.x, cfg);
    const XReal pre = k == Kernel::sin ? sin_prefactor(s, r.x) : cos_prefactor(s, r.x);
    out.value = r.sign * (pre + tail.value);
    out.method = Method::closed_form;
    out.terms_used = tail.terms_used;
    out.error_estimate = cfg.abs_tol;
    return out;
}

inline RegularizedValue alternating_closed_form(Kernel k, const XReal& s, const XReal& x_in,
                                                const EvalConfig& cfg) {
    RegularizedValue out;
    out.method = Method::closed_form;
    out.error_estimate = cfg.abs_tol;
    // Odd/even under x -> 1 - x, as for the plain kernels.
    XReal x = x_in;
    int sign = 1;
    if (x > XReal("0.5")) {
        x = 1 - x;
        sign = k == Kernel::sin ? -1 : 1;
        out.diagnostics.push_back("evaluated at 1-x by parity");
    }
    if (x == XReal("0.5")) {
        // sin(n pi) = 0; cos(n pi) (-1)^{n+1} = -1.
        out.value = k == Kernel::sin ? XReal(0) : XReal(-zeta::riemann_zeta(s));
        return out;
    }
    // The eta power series converges only for x < 1/2, slowly near it; there
    // the shift by 1/2 to the plain series is used when that form is regular.
    if (x > XReal("0.4") && !parity_singular(k, s)) {
        RegularizedValue plain = non_alternating_closed_form(k, s, XReal("0.5") - x, cfg);
        out.value = sign * (k == Kernel::sin ? plain.value : XReal(-plain.value));
        out.terms_used = plain.terms_used;
        out.diagnostics.push_back("evaluated through the half-period shift to the plain series");
        return out;
    }
    const int offset = k == Kernel::sin ? 1 : 0;
    auto coeff = [&](int j) { return zeta::eta(s - j); };
    SumResult tail = power_tail(coeff, offset, x, cfg);
    out.value = sign * tail.value;
    out.terms_used = tail.terms_used;
    return out;
}

}  // namespace detail

/// Closed form for s > 0 and unit weight: prefactor plus zeta power series
/// (plain kernels), or the eta power series (alternating kernels).
inline RegularizedValue closed_form_series(const SeriesSpec& spec, const EvalConfig& cfg = active_config()) {
    spec.validate();
    if (spec.weight != Weight::unit)
        throw CapabilityError("closed_form_series: only unit weight has a closed form");
    if (!(spec.s > 0))
        throw RedirectError("regularized_limit", "closed_form_series: s must be > 0");
    if (!spec.alternating && detail::parity_singular(spec.kernel, spec.s))
        throw RedirectError(spec.kernel == Kernel::sin ? "integer_sin_series" : "integer_cos_series",
                            "closed_form_series: prefactor is singular at this integer s");
    std::vector<std::string> diag;
    if (!spec.alternating)
        detail::near_integer_warning(spec.kernel, spec.s, diag);
    RegularizedValue v = spec.alternating ? detail::alternating_closed_form(spec.kernel, spec.s, spec.x, cfg)
                                          : detail::non_alternating_closed_form(spec.kernel, spec.s, spec.x, cfg);
    v.diagnostics.insert(v.diagnostics.begin(), diag.begin(), diag.end());
    return v;
}

// ---------------------------------------------------------------------------
// s -> 0 limits
// ---------------------------------------------------------------------------

/// lim_{s->0} sum log n sin(2 n pi x)/n^s through the zeta'(-2n-1) power series.
inline RegularizedValue log_sin_limit(const XReal& x_in, const EvalConfig& cfg = active_config()) {
    using boost::multiprecision::log;
    const detail::Reflected r = detail::reflect_high(Kernel::sin, x_in);
    const XReal y = 2 * pi() * r.x;
    auto coeff = [](int j) { return XReal(-zeta_prime_negative_odd((j - 1) / 2)); };
    SumResult tail = detail::power_tail(coeff, 1, r.x, cfg);
    RegularizedValue out;
    out.value = r.sign * (-(zeta::euler_gamma() + log(y)) / y + tail.value);
    out.terms_used = tail.terms_used;
    out.error_estimate = cfg.abs_tol;
    if (r.reflected)
        out.diagnostics.push_back("evaluated at 1-x by parity");
    return out;
}

/// lim_{s->0} sum log n cos(2 n pi x)/n^s = -1/(4x) - sum_n (-1)^n zeta'(-2n) (2 pi x)^{2n}/(2n)!.
inline RegularizedValue log_cos_limit_series(const XReal& x, const EvalConfig& cfg = active_config()) {
    if (!(x > 0) || !(x < 1))
        throw DomainError("log_cos_limit_series: need 0 < x < 1");
    auto coeff = [](int j) { return zeta_prime_negative_even(j / 2); };
    SumResult tail = detail::power_tail(coeff, 0, x, cfg);
    RegularizedValue out;
    out.value = -1 / (4 * x) - tail.value;
    out.terms_used = tail.terms_used;
    out.error_estimate = cfg.abs_tol;
    return out;
}

/// (1/2)[psi(x) + (pi/2) cot(pi x) + gamma + log 2 pi].
inline XReal log_cos_limit_closed(const XReal& x) {
    return (zeta::digamma(x) + pi() / 2 * detail::cot_pi(x) + zeta::euler_gamma() + zeta::log_two_pi()) / 2;
}

/// The s = 0 value of the series, by analytic continuation in s.
inline RegularizedValue regularized_limit(const SeriesSpec& spec, const EvalConfig& cfg = active_config()) {
    spec.validate();
    if (spec.s != 0)
        throw RedirectError("closed_form_series", "regularized_limit: s must be 0");
    if (spec.weight == Weight::log2)
        throw CapabilityError("regularized_limit: log^2 weight is only available from abel_oracle");

    RegularizedValue out;
    out.method = Method::closed_form;
    out.error_estimate = cfg.abs_tol;
    const XReal zero(0);

    if (spec.weight == Weight::log) {
        if (spec.alternating)
            throw CapabilityError("regularized_limit: no alternating log-weighted limit");
        if (spec.kernel == Kernel::sin)
            return log_sin_limit(spec.x, cfg);
        out.value = log_cos_limit_closed(spec.x);
        return out;
    }

    if (!spec.alternating && spec.kernel == Kernel::sin) {
        // 1/(2 pi x) + sum (-1)^n zeta(-2n-1) (2 pi x)^{2n+1}/(2n+1)!
        const detail::Reflected r = detail::reflect_high(Kernel::sin, spec.x);
        auto coeff = [&](int j) { return zeta::riemann_zeta(zero - j); };
        SumResult tail = detail::power_tail(coeff, 1, r.x, cfg);
        out.value = r.sign * (1 / (2 * pi() * r.x) + tail.value);
        out.terms_used = tail.terms_used;
        if (r.reflected)
            out.diagnostics.push_back("evaluated at 1-x by parity");
        return out;
    }
    if (spec.kernel == Kernel::cos) {
        // The prefactor vanishes with 1/Gamma(s); only the power series survives.
        auto coeff = [&](int j) { return spec.alternating ? zeta::eta(zero - j) : zeta::riemann_zeta(zero - j); };
        SumResult tail = detail::power_tail(coeff, 0, spec.x, cfg);
        out.value = tail.value;
        out.terms_used = tail.terms_used;
        return out;
    }
    // Alternating sin: sum (-1)^n eta(-2n-1) (2 pi x)^{2n+1}/(2n+1)! = tan(pi x)/2 for x < 1/2.
    XReal x = spec.x;
    int sign = 1;
    if (x == XReal("0.5"))
        throw PoleError("regularized_limit: alternating sin limit has a pole at x = 1/2");
    if (x > XReal("0.5")) {
        x = 1 - x;
        sign = -1;
        out.diagnostics.push_back("evaluated at 1-x by parity");
    }
    auto coeff = [&](int j) { return zeta::eta(zero - j); };
    SumResult tail = detail::power_tail(coeff, 1, x, cfg);
    out.value = sign * tail.value;
    out.terms_used = tail.terms_used;
    return out;
}

// ---------------------------------------------------------------------------
// Integer exponents
// ---------------------------------------------------------------------------

namespace detail {

inline BigRational exact_rational(const XReal& x) {
    BigRational q;
    mpfr_get_q(q.backend().data(), x.backend().data());
    return q;
}

inline int checked_integer_exponent(const XReal& s, const char* who) {
    if (!is_integer(s))
        throw DomainError(std::string(who) + ": s must be an integer");
    if (s == 0)
        throw RedirectError("regularized_limit", std::string(who) + ": s = 0");
    if (s < 0)
        throw DomainError(std::string(who) + ": s must be positive");
    if (s > 2 * kMaxBernoulliIndex)
        throw CapacityError(std::string(who) + ": s too large");
    return s.convert_to<int>();
}

}  // namespace detail

/// sum sin(2 n pi x)/n^s for integer s >= 1: Bernoulli polynomial for odd s,
/// the L'Hopital limit of the closed form for even s.  In that limit
/// (s - 2m) zeta(s - 2m + 1) = 1 + gamma (s - 2m) + ..., so the bracket is
/// log(2 pi x) - psi(2m) - gamma.
inline RegularizedValue integer_sin_series(const XReal& x_in, const XReal& s_in,
                                           const EvalConfig& cfg = active_config()) {
    using boost::multiprecision::log;
    using boost::multiprecision::pow;
    const int s = detail::checked_integer_exponent(s_in, "integer_sin_series");
    if (!(x_in > 0) || !(x_in < 1))
        throw DomainError("integer_sin_series: need 0 < x < 1");
    RegularizedValue out;
    out.method = Method::integer_branch;
    out.error_estimate = cfg.abs_tol;

    if (s % 2 == 1) {
        // (-1)^{m+1} (2pi)^{2m+1} / (2 (2m+1)!) B_{2m+1}(x)
        const int m = (s - 1) / 2;
        const BigRational b = eval_poly(bernoulli_poly_coeffs(s), detail::exact_rational(x_in));
        const XReal scale = pow(2 * pi(), s) / (2 * detail::factorial(s));
        out.value = (m % 2 == 0 ? -scale : scale) * to_xreal(b);
        out.terms_used = static_cast<std::size_t>(s) + 1;
        return out;
    }

    const int m = s / 2;
    const detail::Reflected r = detail::reflect_high(Kernel::sin, x_in);
    const XReal y = 2 * pi() * r.x;
    // L'Hopital on the singular prefactor: (s-2m) zeta(s-2m+1) = 1 + gamma (s-2m) + ...,
    // so its s-derivative is +gamma and enters the bracket with a minus sign.
    XReal head = pow(y, 2 * m - 1) / detail::factorial(2 * m - 1) *
                 (log(y) - zeta::digamma(XReal(2 * m)) - zeta::euler_gamma());
    if (m % 2 == 1)
        head = -head;
    // finite part n = 0 .. m-2
    XReal finite = 0;
    for (int n = 0; n <= m - 2; ++n) {
        XReal t = zeta::riemann_zeta(XReal(2 * m - 2 * n - 1)) * pow(y, 2 * n + 1) / detail::factorial(2 * n + 1);
        finite += (n % 2 == 0) ? t : XReal(-t);
    }
    // infinite part n >= m: zeta at negative odd integers
    XReal pw = pow(y, 2 * m + 1) / detail::factorial(2 * m + 1);
    auto term = [&](std::size_t k) -> XReal {
        const int n = m + static_cast<int>(k);
        if (k > 0)
            pw *= y * y / XReal((2 * n) * (2 * n + 1));
        XReal t = zeta::riemann_zeta(XReal(2 * m - 2 * n - 1)) * pw;
        return (n % 2 == 0) ? t : XReal(-t);
    };
    SumResult tail = sum_entire(term, cfg);
    out.value = r.sign * (head + finite + tail.value);
    out.terms_used = tail.terms_used + static_cast<std::size_t>(m);
    if (r.reflected)
        out.diagnostics.push_back("evaluated at 1-x by parity");
    return out;
}

/// sum cos(2 n pi x)/n^{2m-1} from Hurwitz derivatives:
/// (-1)^m (2m-2)!/(2pi)^{2m-2} * sum = x^{2m-2} log x - zeta'(2-2m, 1-x) - zeta'(2-2m, 1+x).
inline RegularizedValue integer_cos_series(const XReal& x, const XReal& s_in,
                                           const EvalConfig& cfg = active_config()) {
    using boost::multiprecision::log;
    using boost::multiprecision::pow;
    const int s = detail::checked_integer_exponent(s_in, "integer_cos_series");
    if (s % 2 == 0)
        throw CapabilityError("integer_cos_series: even s is regular; use closed_form_series");
    if (!(x > 0) || !(x < 1))
        throw DomainError("integer_cos_series: need 0 < x < 1");
    const int m = (s + 1) / 2;
    const XReal a(2 - 2 * m);
    XReal bracket = -zeta::hurwitz_zeta_deriv(1, a, 1 - x) - zeta::hurwitz_zeta_deriv(1, a, 1 + x);
    bracket += (m == 1 ? XReal(1) : pow(x, 2 * m - 2)) * log(x);
    const XReal scale = pow(2 * pi(), 2 * m - 2) / detail::factorial(2 * m - 2);
    RegularizedValue out;
    out.value = (m % 2 == 0 ? scale : XReal(-scale)) * bracket;
    out.method = Method::integer_branch;
    out.error_estimate = cfg.abs_tol;
    out.terms_used = 2;
    return out;
}

/// sum sin(2 n pi x)/n^{2m} from Hurwitz derivatives:
/// (-1)^m (2m-1)!/(2pi)^{2m-1} * sum = x^{2m-1} log x + zeta'(1-2m, 1-x) - zeta'(1-2m, 1+x).
inline XReal even_sin_series_hurwitz(int m, const XReal& x) {
    using boost::multiprecision::log;
    using boost::multiprecision::pow;
    if (m < 1)
        throw DomainError("even_sin_series_hurwitz: m must be >= 1");
    if (!(x > 0) || !(x < 1))
        throw DomainError("even_sin_series_hurwitz: need 0 < x < 1");
    const XReal a(1 - 2 * m);
    const XReal bracket = pow(x, 2 * m - 1) * log(x) + zeta::hurwitz_zeta_deriv(1, a, 1 - x) -
                          zeta::hurwitz_zeta_deriv(1, a, 1 + x);
    const XReal scale = pow(2 * pi(), 2 * m - 1) / detail::factorial(2 * m - 1);
    return (m % 2 == 0 ? scale : XReal(-scale)) * bracket;
}

/// sum log n sin(2 n pi t)/n as a power series:
/// -(pi/2)(gamma + log 2 pi t) - sum_n (-1)^n zeta'(-2n) (2 pi t)^{2n+1}/(2n+1)!.
inline RegularizedValue log_sin_series_at_one(const XReal& t_in, const EvalConfig& cfg = active_config()) {
    using boost::multiprecision::log;
    if (!(t_in > 0) || !(t_in < 1))
        throw DomainError("log_sin_series_at_one: need 0 < t < 1");
    const detail::Reflected r = detail::reflect_high(Kernel::sin, t_in);
    auto coeff = [](int j) { return zeta_prime_negative_even((j - 1) / 2); };
    SumResult tail = detail::power_tail(coeff, 1, r.x, cfg);
    RegularizedValue out;
    out.value = r.sign * (-pi() / 2 * (zeta::euler_gamma() + log(2 * pi() * r.x)) - tail.value);
    out.terms_used = tail.terms_used;
    out.error_estimate = cfg.abs_tol;
    if (r.reflected)
        out.diagnostics.push_back("evaluated at 1-x by parity");
    return out;
}

/// Dispatch: s = 0 -> regularized_limit; parity-singular integer s -> the
/// integer branches; otherwise closed_form_series.
inline RegularizedValue evaluate(const SeriesSpec& spec, const EvalConfig& cfg = active_config()) {
    spec.validate();
    if (spec.s == 0)
        return regularized_limit(spec, cfg);
    if (spec.weight != Weight::unit)
        throw CapabilityError("evaluate: weighted series with s > 0 have no closed form here; use an oracle");
    if (!spec.alternating && detail::parity_singular(spec.kernel, spec.s)) {
        return spec.kernel == Kernel::sin ? integer_sin_series(spec.x, spec.s, cfg)
                                          : integer_cos_series(spec.x, spec.s, cfg);
    }
    return closed_form_series(spec, cfg);
}

}  // namespace regsum

#endif  // REGSUM_TRIG_SERIES_HPP
