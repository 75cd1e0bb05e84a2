#ifndef REGSUM_CONFIG_HPP
#define REGSUM_CONFIG_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <cstddef>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>

namespace regsum {

/// Extended-precision real used for every analytic quantity in the library.
/// Precision is process-wide and set through `configure`.
using XReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                            boost::multiprecision::et_off>;

/// Digits carried beyond the reporting precision.
inline constexpr int kGuardDigits = 10;
inline constexpr int kMinPrecisionDigits = 30;
inline constexpr int kDefaultPrecisionDigits = 50;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation requested exactly at a pole.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Request exceeds a hard resource guard (e.g. Bernoulli index > 512).
class CapacityError : public Error {
public:
    using Error::Error;
};

/// An iterative procedure did not reach its stopping rule.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Too few samples / wrong number of inputs.
class ArityError : public Error {
public:
    using Error::Error;
};

/// The operation does not support this combination of options.
class CapabilityError : public Error {
public:
    using Error::Error;
};

/// Input belongs to a different evaluation branch; `target()` names it.
class RedirectError : public Error {
public:
    RedirectError(std::string target, const std::string& what)
        : Error(what + " (use " + target + ")"), target_(std::move(target)) {}
    const std::string& target() const noexcept { return target_; }

private:
    std::string target_;
};

/// Unknown registry key.
class LookupError : public Error {
public:
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Evaluation configuration
// ---------------------------------------------------------------------------

struct EvalConfig {
    int precision_digits = kDefaultPrecisionDigits;
    XReal abs_tol = XReal("1e-20");
    std::size_t max_terms = 1'000'000;
    int abel_r_levels = 12;
    int richardson_order = 6;

    void validate() const {
        if (precision_digits < kMinPrecisionDigits)
            throw DomainError("precision_digits must be >= " + std::to_string(kMinPrecisionDigits));
        if (!(abs_tol > 0))
            throw DomainError("abs_tol must be positive");
        if (max_terms < 100)
            throw DomainError("max_terms must be >= 100");
        if (abel_r_levels < 4)
            throw DomainError("abel_r_levels must be >= 4");
        if (richardson_order < 1)
            throw DomainError("richardson_order must be >= 1");
        if (richardson_order + 1 > abel_r_levels + 1)
            throw DomainError("richardson_order needs at least order+1 Abel levels");
    }
};

namespace detail {
inline EvalConfig& config_storage() {
    static EvalConfig cfg;
    return cfg;
}
inline std::mutex& config_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace detail

/// Installs `cfg` as the process-wide configuration and sets the working
/// precision to precision_digits + kGuardDigits.
inline void configure(const EvalConfig& cfg) {
    cfg.validate();
    std::lock_guard lock(detail::config_mutex());
    XReal::default_precision(static_cast<unsigned>(cfg.precision_digits + kGuardDigits));
    detail::config_storage() = cfg;
    detail::config_storage().abs_tol = XReal(cfg.abs_tol);
}

inline const EvalConfig& active_config() { return detail::config_storage(); }

/// Decimal digits currently carried by freshly constructed XReal values.
inline int working_digits() { return static_cast<int>(XReal::default_precision()); }

/// 10^-working_digits: the rounding floor of the working precision.
inline XReal working_epsilon() {
    return boost::multiprecision::pow(XReal(10), -working_digits());
}

/// Precision requested through REGSUM_PRECISION, or the default.
inline int precision_from_environment(int fallback = kDefaultPrecisionDigits) {
    const char* env = std::getenv("REGSUM_PRECISION");
    if (env == nullptr || *env == '\0')
        return fallback;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < kMinPrecisionDigits || v > 100000)
        return fallback;
    return static_cast<int>(v);
}

// ---------------------------------------------------------------------------
// Small XReal helpers
// ---------------------------------------------------------------------------

inline XReal pi() {
    XReal r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

inline XReal log2_const() {
    XReal r;
    mpfr_const_log2(r.backend().data(), MPFR_RNDN);
    return r;
}

inline XReal expm1(const XReal& v) {
    XReal r;
    mpfr_expm1(r.backend().data(), v.backend().data(), MPFR_RNDN);
    return r;
}

inline XReal infinity() { return std::numeric_limits<XReal>::infinity(); }

inline bool is_integer(const XReal& v) { return boost::multiprecision::floor(v) == v; }

inline XReal abs(const XReal& v) { return boost::multiprecision::abs(v); }

inline XReal max_abs(const XReal& a, const XReal& b) {
    XReal aa = abs(a), bb = abs(b);
    return aa > bb ? aa : bb;
}

}  // namespace regsum

#endif  // REGSUM_CONFIG_HPP
