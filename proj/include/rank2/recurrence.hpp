#pragma once

// The (b,c) exchange recurrence
//
//     x_n * x_{n-2} = x_{n-1}^b + 1   (n odd)
//     x_n * x_{n-2} = x_{n-1}^c + 1   (n even)
//
// run forward from the generators x_1, x_2 and backward through zero and
// the negative indices. Every value is an exact Laurent polynomial; a
// NotDivisible escaping from a step would mean the Laurent phenomenon
// failed, i.e. a bug.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

#include "rank2/laurent.hpp"
#include "rank2/report.hpp"

namespace rank2 {

struct CaseParams {
    int b = 1;
    int c = 1;

    CaseParams(int b_, int c_) : b(b_), c(c_) {
        if (b < 1 || c < 1) throw std::invalid_argument("CaseParams: b and c must be positive");
    }
    friend bool operator==(const CaseParams&, const CaseParams&) = default;
};

class SequenceCache {
public:
    explicit SequenceCache(CaseParams params) : params_(params) {
        values_[1] = Laurent::x1();
        values_[2] = Laurent::x2();
    }

    const CaseParams& params() const { return params_; }

    // x_n for any integer n. Forward for n >= 3, backward for n <= 0 via
    // the rearranged relation x_{n} = (x_{n+1}^e + 1) / x_{n+2}; the
    // exponent is b at odd index, c at even, judged by the smaller index
    // of the relation (which has the same parity as the larger one).
    const Laurent& x_at(std::int64_t n) {
        if (auto it = values_.find(n); it != values_.end()) return it->second;
        while (hi_ < n) {
            const Laurent next =
                div_exact(pow(values_.at(hi_), exponent_for(hi_ + 1)) + 1, values_.at(hi_ - 1));
            values_[++hi_] = next;
        }
        while (lo_ > n) {
            const Laurent prev =
                div_exact(pow(values_.at(lo_), exponent_for(lo_ - 1)) + 1, values_.at(lo_ + 1));
            values_[--lo_] = prev;
        }
        return values_.at(n);
    }

    Int eval_at_ones(std::int64_t n) { return eval(x_at(n), 1, 1); }

private:
    std::uint64_t exponent_for(std::int64_t n) const {
        return static_cast<std::uint64_t>((n % 2) != 0 ? params_.b : params_.c);
    }

    CaseParams params_;
    std::map<std::int64_t, Laurent> values_;
    std::int64_t lo_ = 1;
    std::int64_t hi_ = 2;
};

// Smallest period p <= horizon with x_{n+p} = x_n as Laurent polynomials
// for every n in the window [1, horizon + 2], or nullopt. Comparing full
// polynomials (rather than evaluations) rules out accidental collisions.
inline std::optional<int> detect_period(CaseParams params, int horizon) {
    if (horizon < 1) throw std::invalid_argument("detect_period: horizon must be positive");
    SequenceCache cache(params);
    const std::int64_t window = horizon + 2;
    for (int p = 1; p <= horizon; ++p) {
        bool ok = true;
        for (std::int64_t n = 1; n <= window && ok; ++n) ok = cache.x_at(n + p) == cache.x_at(n);
        if (ok) return p;
    }
    return std::nullopt;
}

// Index-reversal symmetry: x_{-n} under (b,c) equals x_{n+3} under (c,b)
// with the two variables exchanged. Both sides are computed independently
// by this engine.
inline VerificationReport check_reciprocity(int b, int c, std::int64_t lo, std::int64_t hi) {
    VerificationReport report;
    report.identity = "RECIPROCITY";
    report.lo = lo;
    report.hi = hi;
    SequenceCache fwd(CaseParams{b, c});
    SequenceCache rev(CaseParams{c, b});
    for (std::int64_t n = lo; n <= hi; ++n) {
        const Laurent& lhs = fwd.x_at(-n);
        const Laurent rhs = swap_vars(rev.x_at(n + 3));
        if (lhs != rhs) report.record(n, lhs.to_string(), rhs.to_string());
    }
    return report;
}

}  // namespace rank2
