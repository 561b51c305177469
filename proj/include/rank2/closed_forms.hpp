#pragma once

// Closed forms attached to the two affine cases: denominator monomials,
// the explicit binomial formula for the (2,2) cluster variables, the
// restricted-subset counts they expand into, and the Chebyshev-type
// elements s_n shared by both cases.

#include <cstdint>
#include <stdexcept>

#include "rank2/graph.hpp"
#include "rank2/laurent.hpp"
#include "rank2/recurrence.hpp"

namespace rank2 {

struct GroundSetTooLarge : std::runtime_error {
    explicit GroundSetTooLarge(int n)
        : std::runtime_error("subset brute force limited to N <= 24, got " + std::to_string(n)) {}
};

struct UnsupportedCase : std::runtime_error {
    UnsupportedCase() : std::runtime_error("only the (2,2) and (1,4) cases are supported") {}
};

// Binomial coefficient; choosing zero is always one way, anything else out
// of range is zero. C(n, 0) = 1 even for negative n keeps the subset-
// count formula total at q = n+1, the all-odd-numbers subset.
inline Int binomial(std::int64_t n, std::int64_t k) {
    if (k == 0) return 1;
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Denominator monomial of the (2,2) case: x1^{n-2} x2^{n-3} for n >= 3.
inline Monomial m22(std::int64_t n) {
    if (n < 3) throw IndexOutOfFamily("m22 requires n >= 3");
    return Monomial{n - 2, n - 3};
}

// Denominator exponents of the (1,4) case, equal to the number of square
// and octagon cells of G_n.
inline std::pair<std::int64_t, std::int64_t> sq_oct(std::int64_t n) {
    if (n == 1 || n == 2) throw IndexOutOfFamily("sq_oct is not defined at n = 1, 2");
    auto abs64 = [](std::int64_t v) { return v < 0 ? -v : v; };
    if (n % 2 != 0) return {abs64(n - 1) - 1, (abs64(n - 2) - 1) / 2};
    return {abs64(2 * n - 2) - 2, abs64(n - 2) - 1};
}

// The explicit (2,2) formula: for n >= 0,
//   x_{n+3} = (x2^{2n+2} + sum_{q+r<=n} C(n-r,q) C(n+1-q,r) x1^{2q} x2^{2r}) / x1^{n+1} x2^n
//   x_{-n}  = (x1^{2n+2} + sum_{q+r<=n} C(n+1-r,q) C(n-q,r) x1^{2q} x2^{2r}) / x1^n x2^{n+1}
// covering every index outside {1, 2}.
inline Laurent explicit_x22(std::int64_t index) {
    if (index == 1 || index == 2) throw IndexOutOfFamily("explicit_x22 is not defined at n = 1, 2");
    Laurent num;
    std::int64_t d1 = 0, d2 = 0;
    if (index >= 3) {
        const std::int64_t n = index - 3;
        num.add_term({0, 2 * n + 2}, 1);
        for (std::int64_t q = 0; q <= n; ++q)
            for (std::int64_t r = 0; q + r <= n; ++r)
                num.add_term({2 * q, 2 * r}, binomial(n - r, q) * binomial(n + 1 - q, r));
        d1 = n + 1;
        d2 = n;
    } else {
        const std::int64_t n = -index;
        num.add_term({2 * n + 2, 0}, 1);
        for (std::int64_t q = 0; q <= n; ++q)
            for (std::int64_t r = 0; q + r <= n; ++r)
                num.add_term({2 * q, 2 * r}, binomial(n + 1 - r, q) * binomial(n - q, r));
        d1 = n;
        d2 = n + 1;
    }
    return num.shifted(-d1, -d2);
}

struct SubsetCountQuery {
    int N = 0;  // ground set {1..N}
    int q = 0;  // odd elements required
    int r = 0;  // even elements required
};

// Number of subsets of {1..N} with q odd and r even elements and no two
// consecutive: C(n+1-r,q) C(n-q,r) when N = 2n+1, C(n-r,q) C(n-q,r) when
// N = 2n.
inline Int subset_count_formula(const SubsetCountQuery& query) {
    const std::int64_t n = query.N / 2;
    if (query.N % 2 != 0) return binomial(n + 1 - query.r, query.q) * binomial(n - query.q, query.r);
    return binomial(n - query.r, query.q) * binomial(n - query.q, query.r);
}

// The same count by exhausting all 2^N subsets.
inline Int subset_count_bruteforce(const SubsetCountQuery& query) {
    if (query.N > 24) throw GroundSetTooLarge(query.N);
    if (query.N < 0) throw std::invalid_argument("subset_count_bruteforce: negative N");
    Int count = 0;
    for (std::uint32_t mask = 0; mask < (1u << query.N); ++mask) {
        if (mask & (mask << 1)) continue;  // consecutive elements
        int odd = 0, even = 0;
        for (int i = 0; i < query.N; ++i)
            if (mask & (1u << i)) ((i + 1) % 2 != 0 ? odd : even)++;
        if (odd == query.q && even == query.r) ++count;
    }
    return count;
}

// Chebyshev-normalized basis elements: s_0 = 1, s_1 = z, s_n = z s_{n-1} -
// s_{n-2}, where z is (x1^2+x2^2+1)/x1x2 for (2,2) and
// (x1^4+(x2+1)^2)/x1^2x2 for (1,4).
inline Laurent chebyshev_s(const CaseParams& params, int n) {
    if (n < 0) throw std::invalid_argument("chebyshev_s: n must be nonnegative");
    Laurent z;
    if (params == CaseParams{2, 2}) {
        z = (pow(Laurent::x1(), 2) + pow(Laurent::x2(), 2) + 1) * Laurent::monomial(-1, -1);
    } else if (params == CaseParams{1, 4}) {
        z = (pow(Laurent::x1(), 4) + square(Laurent::x2() + 1)) * Laurent::monomial(-2, -1);
    } else {
        throw UnsupportedCase();
    }
    Laurent prev = 1, cur = z;
    if (n == 0) return prev;
    for (int i = 1; i < n; ++i) {
        Laurent next = z * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace rank2
