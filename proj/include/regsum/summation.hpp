#ifndef REGSUM_SUMMATION_HPP
#define REGSUM_SUMMATION_HPP

#include "regsum/bernoulli.hpp"
#include "regsum/config.hpp"

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace regsum {

/// Neumaier-compensated accumulator.
template <class Real>
class CompensatedSum {
public:
    void add(const Real& v) {
        Real t = sum_ + v;
        using std::abs;
        if (abs(sum_) >= abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    Real value() const { return sum_ + comp_; }

private:
    Real sum_{0};
    Real comp_{0};
};

struct SumResult {
    XReal value;
    std::size_t terms_used = 0;
};

/// Sums term(0) + term(1) + ... for series whose terms eventually decay.
/// `term` is called with n = 0, 1, 2, ... in order, so it may carry state.
/// Stops once three consecutive terms fall below abs_tol/100.
template <class TermFn>
SumResult sum_entire(TermFn&& term, const EvalConfig& cfg) {
    const XReal threshold = cfg.abs_tol / 100;
    CompensatedSum<XReal> acc;
    int small_run = 0;
    for (std::size_t n = 0; n < cfg.max_terms; ++n) {
        XReal t = term(n);
        acc.add(t);
        if (abs(t) < threshold) {
            if (++small_run == 3)
                return {acc.value(), n + 1};
        } else {
            small_run = 0;
        }
    }
    throw ConvergenceError("sum_entire: terms did not decay within max_terms = " +
                           std::to_string(cfg.max_terms));
}

template <class Real>
struct Extrapolation {
    Real value;
    Real error_estimate;
};

/// Polynomial (Neville) extrapolation to h = 0 through the last order+1
/// samples.  The error estimate is the difference between the degree-`order`
/// value and the degree-(order-1) value built from the samples nearest h = 0.
template <class Real>
Extrapolation<Real> richardson_extrapolate(const std::vector<std::pair<Real, Real>>& samples,
                                           int order) {
    if (order < 1)
        throw ArityError("richardson_extrapolate: order must be >= 1");
    if (samples.size() < static_cast<std::size_t>(order) + 1)
        throw ArityError("richardson_extrapolate: need at least order+1 = " +
                         std::to_string(order + 1) + " samples, got " +
                         std::to_string(samples.size()));
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (!(samples[i].first < samples[i - 1].first) || !(samples[i].first > 0))
            throw DomainError("richardson_extrapolate: h must be positive and strictly decreasing");
    }
    const std::size_t first = samples.size() - static_cast<std::size_t>(order) - 1;
    const std::size_t count = static_cast<std::size_t>(order) + 1;
    std::vector<Real> h(count), p(count);
    for (std::size_t i = 0; i < count; ++i) {
        h[i] = samples[first + i].first;
        p[i] = samples[first + i].second;
    }
    // Neville tableau evaluated at 0; after pass k, p[i] interpolates samples i-k..i.
    Real lower_degree = p[count - 1];
    for (std::size_t k = 1; k < count; ++k) {
        for (std::size_t i = count - 1; i >= k; --i) {
            p[i] = (h[i - k] * p[i] - h[i] * p[i - 1]) / (h[i - k] - h[i]);
            if (i == k)
                break;
        }
        if (k == count - 2)
            lower_degree = p[count - 1];
    }
    Real value = p[count - 1];
    using std::abs;
    Real err = abs(value - lower_degree);
    return {value, err};
}

/// cot x from its Bernoulli power series 1/x + sum (-1)^n 2^{2n} B_{2n} x^{2n-1}/(2n)!.
inline XReal cot_via_series(const XReal& x, const EvalConfig& cfg = active_config()) {
    const XReal ax = abs(x);
    if (!(ax > 0) || !(ax < XReal("0.9") * pi()))
        throw DomainError("cot_via_series: need 0 < |x| < 0.9*pi");
    const XReal x2 = x * x;
    // scale_n = (-1)^n 2^{2n} x^{2n-1} / (2n)!
    XReal scale = 1 / x;
    auto term = [&](std::size_t k) -> XReal {
        const int n = static_cast<int>(k) + 1;
        scale *= -4 * x2 / XReal((2 * n - 1) * (2 * n));
        return scale * bernoulli_real(2 * n);
    };
    return 1 / x + sum_entire(term, cfg).value;
}

/// tan x = cot x - 2 cot 2x.
inline XReal tan_via_series(const XReal& x, const EvalConfig& cfg = active_config()) {
    if (!(abs(x) < XReal("0.45") * pi()))
        throw DomainError("tan_via_series: need |x| < 0.45*pi");
    if (x == 0)
        return XReal(0);
    return cot_via_series(x, cfg) - 2 * cot_via_series(2 * x, cfg);
}

}  // namespace regsum

#endif  // REGSUM_SUMMATION_HPP
