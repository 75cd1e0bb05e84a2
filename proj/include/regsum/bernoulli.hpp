#ifndef REGSUM_BERNOULLI_HPP
#define REGSUM_BERNOULLI_HPP

#include "regsum/config.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <map>
#include <mutex>
#include <vector>

namespace regsum {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

/// Largest Bernoulli index served by the exact table.
inline constexpr int kMaxBernoulliIndex = 512;

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n)
        return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.backend().data(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

namespace detail {

struct BernoulliTable {
    std::mutex mutex;
    std::vector<BigRational> values{BigRational(1)};
};

inline BernoulliTable& bernoulli_table() {
    static BernoulliTable table;
    return table;
}

inline void check_bernoulli_index(int n) {
    if (n < 0)
        throw DomainError("Bernoulli index must be non-negative");
    if (n > kMaxBernoulliIndex)
        throw CapacityError("Bernoulli index " + std::to_string(n) + " exceeds guard " +
                            std::to_string(kMaxBernoulliIndex));
}

}  // namespace detail

/// B_n with the convention B_1 = -1/2, from the recurrence
/// sum_{k=0}^{n} C(n+1,k) B_k = 0.  Memoized; thread-safe.
inline BigRational bernoulli_number(int n) {
    detail::check_bernoulli_index(n);
    auto& table = detail::bernoulli_table();
    std::lock_guard lock(table.mutex);
    auto& b = table.values;
    for (int m = static_cast<int>(b.size()); m <= n; ++m) {
        BigRational acc(0);
        for (int k = 0; k < m; ++k) {
            if (b[k] == 0)
                continue;
            acc += BigRational(binomial(m + 1, k)) * b[k];
        }
        b.push_back(-acc / BigRational(m + 1));
    }
    return b[n];
}

/// Degree-ascending coefficients of the Bernoulli polynomial B_n(x):
/// coefficient of x^j is C(n,j) B_{n-j}.
inline std::vector<BigRational> bernoulli_poly_coeffs(int n) {
    detail::check_bernoulli_index(n);
    std::vector<BigRational> c(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j)
        c[j] = BigRational(binomial(n, j)) * bernoulli_number(n - j);
    return c;
}

inline BigRational eval_poly(const std::vector<BigRational>& coeffs, const BigRational& x) {
    BigRational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

inline XReal to_xreal(const BigRational& q) {
    XReal r;
    mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
    return r;
}

inline XReal eval_poly(const std::vector<BigRational>& coeffs, const XReal& x) {
    XReal acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + to_xreal(*it);
    return acc;
}

/// Coefficient-wise derivative of a degree-ascending polynomial.
inline std::vector<BigRational> poly_derivative(const std::vector<BigRational>& coeffs) {
    if (coeffs.size() <= 1)
        return {BigRational(0)};
    std::vector<BigRational> d(coeffs.size() - 1);
    for (std::size_t j = 1; j < coeffs.size(); ++j)
        d[j - 1] = coeffs[j] * BigRational(static_cast<long>(j));
    return d;
}

/// B_n rounded to the current working precision, cached per precision.
inline XReal bernoulli_real(int n) {
    struct Cache {
        std::mutex mutex;
        std::map<unsigned, std::map<int, XReal>> values;
    };
    static Cache cache;
    const unsigned prec = XReal::default_precision();
    {
        std::lock_guard lock(cache.mutex);
        auto& table = cache.values[prec];
        if (auto it = table.find(n); it != table.end())
            return it->second;
    }
    XReal v = to_xreal(bernoulli_number(n));
    std::lock_guard lock(cache.mutex);
    cache.values[prec].emplace(n, v);
    return v;
}

}  // namespace regsum

#endif  // REGSUM_BERNOULLI_HPP
