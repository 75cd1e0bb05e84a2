#ifndef REGSUM_ORACLES_HPP
#define REGSUM_ORACLES_HPP

// Independent numerical oracles for the trigonometric series.  They share no
// code with the closed forms and run in long double: their job is to confirm
// values to 1e-6 .. 1e-10, not to reproduce them to working precision.

#include "regsum/summation.hpp"
#include "regsum/trig_series.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace regsum {

namespace detail {

struct OracleTerm {
    long double x;
    long double s;
    Kernel kernel;
    Weight weight;
    bool alternating;

    explicit OracleTerm(const SeriesSpec& spec)
        : x(spec.x.convert_to<long double>()),
          s(spec.s.convert_to<long double>()),
          kernel(spec.kernel),
          weight(spec.weight),
          alternating(spec.alternating) {}

    /// Weight times n^{-s}; used for the tail bound as well.
    long double envelope(long n) const {
        const double ln = std::log(static_cast<double>(n));
        double w = 1;
        if (weight == Weight::log)
            w = ln;
        else if (weight == Weight::log2)
            w = ln * ln;
        if (s == 0)
            return w;
        if (s == 1)
            return w / static_cast<double>(n);
        return w * std::exp(-static_cast<double>(s) * ln);
    }

    /// exp(2 pi i n x) with n x reduced mod 1 exactly: p = fl(n x) plus the
    /// rounding error of the product.
    void phase(long n, long double& c, long double& sn) const {
        const long double nl = static_cast<long double>(n);
        const long double p = nl * x;
        const long double frac = (p - std::floor(p)) + std::fma(nl, x, -p);
        const long double angle = 2 * std::numbers::pi_v<long double> * frac;
        c = std::cos(angle);
        sn = std::sin(angle);
    }
};

/// Terms a_1, a_2, ... in order.  The phase advances by complex rotation and
/// is recomputed exactly every 256 steps.
class TermStream {
public:
    explicit TermStream(const SeriesSpec& spec) : term_(spec) {
        term_.phase(1, step_c_, step_s_);
    }

    long double next() {
        ++n_;
        if (n_ % 256 == 1) {
            term_.phase(n_, c_, s_);
        } else {
            const long double c = c_ * step_c_ - s_ * step_s_;
            s_ = s_ * step_c_ + c_ * step_s_;
            c_ = c;
        }
        long double t = (term_.kernel == Kernel::sin ? s_ : c_) * term_.envelope(n_);
        if (term_.alternating && n_ % 2 == 0)
            t = -t;
        return t;
    }

    long index() const { return n_; }
    const OracleTerm& term() const { return term_; }

private:
    OracleTerm term_;
    long n_ = 0;
    long double c_ = 1, s_ = 0, step_c_ = 1, step_s_ = 0;
};

struct KahanSum {
    long double sum = 0;
    long double comp = 0;
    void add(long double v) {
        const long double y = v - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    long double value() const { return sum - comp; }
};

}  // namespace detail

/// Abel means A(r) = sum r^n a_n at r = 1 - 2^{-k}, k = 4 .. 4 + abel_r_levels,
/// extrapolated to r = 1 in h = 1 - r.  All levels share one pass over n.
inline RegularizedValue abel_oracle(const SeriesSpec& spec, const EvalConfig& cfg = active_config()) {
    spec.validate();
    detail::TermStream stream(spec);
    const int levels = cfg.abel_r_levels + 1;
    const long double tol = cfg.abs_tol.convert_to<long double>() / 10;
    // Hard stop far beyond what any level needs (about 60/h terms at abs_tol = 1e-20).
    const long hard_cap = 4'000'000'000L;

    std::vector<long double> r(levels), h(levels), rn(levels);
    std::vector<detail::KahanSum> acc(levels);
    std::vector<bool> done(levels, false);
    std::vector<long> used(levels, 0);
    for (int i = 0; i < levels; ++i) {
        h[i] = std::ldexp(1.0L, -(4 + i));
        r[i] = 1 - h[i];
        rn[i] = 1;
    }
    int remaining = levels;
    long n = 1;
    for (; remaining > 0; ++n) {
        if (n > hard_cap)
            throw ConvergenceError("abel_oracle: geometric tail did not fall below tolerance");
        const long double a = stream.next();
        const bool resync = (n % 4096 == 0);
        bool check = (n % 64 == 0);
        const long double env = check ? std::max(stream.term().envelope(n), 1.0L) : 0;
        for (int i = 0; i < levels; ++i) {
            if (done[i])
                continue;
            rn[i] = resync ? std::pow(r[i], static_cast<long double>(n)) : rn[i] * r[i];
            acc[i].add(rn[i] * a);
            if (check && env * rn[i] / h[i] < tol) {
                done[i] = true;
                used[i] = n;
                --remaining;
            }
        }
    }

    std::vector<std::pair<long double, long double>> samples;
    samples.reserve(levels);
    for (int i = 0; i < levels; ++i)
        samples.emplace_back(h[i], acc[i].value());
    auto ex = richardson_extrapolate(samples, cfg.richardson_order);

    RegularizedValue out;
    out.value = XReal(ex.value);
    out.method = Method::abel;
    // Rounding floor: weights are formed in double and the deepest level adds
    // about sqrt(N) independent rounding errors of the largest weight.
    const long double deepest = static_cast<long double>(used.back());
    const long double floor_err = std::numeric_limits<double>::epsilon() * std::sqrt(deepest) *
                                  (1 + stream.term().envelope(used.back())) *
                                  std::max(1.0L, std::fabs(ex.value));
    out.error_estimate = XReal(ex.error_estimate + floor_err);
    out.terms_used = static_cast<std::size_t>(used.back());
    return out;
}

/// Partial sums to N, averaged over the last ceil(sqrt N) of them (s > 1).
inline RegularizedValue direct_oracle(const SeriesSpec& spec, long N) {
    spec.validate();
    if (!(spec.s > 1))
        throw DomainError("direct_oracle: requires s > 1");
    RegularizedValue out;
    out.method = Method::direct;
    if (N <= 0) {
        out.value = 0;
        out.error_estimate = infinity();
        return out;
    }
    detail::TermStream stream(spec);
    const long window = static_cast<long>(std::ceil(std::sqrt(static_cast<long double>(N))));
    detail::KahanSum partial, avg;
    for (long n = 1; n <= N; ++n) {
        partial.add(stream.next());
        if (n > N - window)
            avg.add(partial.value());
    }
    out.value = XReal(avg.value() / static_cast<long double>(window));
    // Tail size: envelope/(2 sin(pi d)) for effective frequency d (mod 1), but
    // never more than the non-oscillating tail M^{1-s}/(s-1) from the window start M.
    const long double f = stream.term().x + (spec.alternating ? 0.5L : 0.0L);
    const long double d = std::min(f - std::floor(f), std::ceil(f) - f);
    const long double s = stream.term().s;
    const long double M = static_cast<long double>(std::max(N - window, 1L));
    const long double flat = M / (s - 1) * std::pow(static_cast<long double>(N) / M, s);
    const long double tail_factor =
        std::min(flat, 1 / (2 * std::sin(std::numbers::pi_v<long double> * d)));
    out.error_estimate = XReal(stream.term().envelope(N) * tail_factor + std::numeric_limits<long double>::epsilon() * N);
    out.terms_used = static_cast<std::size_t>(N);
    return out;
}

}  // namespace regsum

#endif  // REGSUM_ORACLES_HPP
