#pragma once

// Exact verification of the algebraic identities tying the recurrence,
// the matching polynomials and the closed forms together. Every identity
// is checked as a polynomial equation, term by term, over an index range;
// failures carry both sides in canonical text form.
//
// The p_n here always come from the matching engine and the x_n from the
// recurrence engine, so the MAIN theorems compare two independent
// pipelines rather than one pipeline against itself.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rank2/closed_forms.hpp"
#include "rank2/families.hpp"
#include "rank2/matching.hpp"
#include "rank2/recurrence.hpp"
#include "rank2/report.hpp"

namespace rank2 {

struct UnknownIdentity : std::runtime_error {
    explicit UnknownIdentity(const std::string& name)
        : std::runtime_error("unknown identity '" + name + "'") {}
};

enum class IdentityId {
    MAIN_22,
    P_RECUR_22,
    LINEAR_22,
    ODD_Q_22,
    DISJOINT_22,
    MAIN_14,
    STEP1_14,
    STEP2_14,
    TILDE_LINEAR,
    MIXED,
    TILDES,
    KEYSTEP,
    PROD_DIFF,
    THREE_TERM,
    SEMI_14,
    RECIPROCITY,
    POSITIVITY,
    PERIODICITY,
};

inline const std::vector<std::pair<IdentityId, const char*>>& identity_names() {
    static const std::vector<std::pair<IdentityId, const char*>> names = {
        {IdentityId::MAIN_22, "MAIN_22"},         {IdentityId::P_RECUR_22, "P_RECUR_22"},
        {IdentityId::LINEAR_22, "LINEAR_22"},     {IdentityId::ODD_Q_22, "ODD_Q_22"},
        {IdentityId::DISJOINT_22, "DISJOINT_22"}, {IdentityId::MAIN_14, "MAIN_14"},
        {IdentityId::STEP1_14, "STEP1_14"},       {IdentityId::STEP2_14, "STEP2_14"},
        {IdentityId::TILDE_LINEAR, "TILDE_LINEAR"}, {IdentityId::MIXED, "MIXED"},
        {IdentityId::TILDES, "TILDES"},           {IdentityId::KEYSTEP, "KEYSTEP"},
        {IdentityId::PROD_DIFF, "PROD_DIFF"},     {IdentityId::THREE_TERM, "THREE_TERM"},
        {IdentityId::SEMI_14, "SEMI_14"},         {IdentityId::RECIPROCITY, "RECIPROCITY"},
        {IdentityId::POSITIVITY, "POSITIVITY"},   {IdentityId::PERIODICITY, "PERIODICITY"},
    };
    return names;
}

inline std::string identity_name(IdentityId id) {
    for (const auto& [key, name] : identity_names())
        if (key == id) return name;
    throw UnknownIdentity("<bad id>");
}

inline IdentityId identity_from_name(const std::string& name) {
    for (const auto& [key, n] : identity_names())
        if (name == n) return key;
    throw UnknownIdentity(name);
}

// Computes and caches the polynomial families one verification run needs.
// Each Verifier owns its caches, so concurrent runs do not share state.
class Verifier {
public:
    Verifier() : x22_(CaseParams{2, 2}), x14_(CaseParams{1, 4}) {}

    // matching polynomial of G_n, (2,2) case
    const Laurent& p22(std::int64_t n) {
        return memo(p22_, n, [&] { return match_polynomial(build_G22(n)); });
    }
    // matching polynomial of the grid H_m
    const Laurent& q22(std::int64_t m) {
        return memo(q22_, m, [&] { return match_polynomial(build_H(static_cast<int>(m))); });
    }
    // matching polynomial of G_n, (1,4) case. At the out-of-family indices
    // 1 and 2 the denominator exponent formulas continue to sq(1) = -1
    // resp. oct(2) = -1, so the numerator is the empty product 1; the
    // negative-index branches of the product relations rely on this.
    const Laurent& p14(std::int64_t n) {
        return memo(p14_, n, [&]() -> Laurent {
            if (n == 1 || n == 2) return 1;
            return match_polynomial(build_G14(n));
        });
    }
    // matching polynomial of tilde-G_m; the index-reversal symmetry
    // tilde-p_m = tilde-p_{4-m} supplies the value at the out-of-family
    // index 1, where it equals tilde-p_3 = 1.
    const Laurent& tp14(std::int64_t m) {
        return memo(tp14_, m, [&]() -> Laurent {
            if (m == 1) return 1;
            return match_polynomial(build_tildeG14(m));
        });
    }

    SequenceCache& x22() { return x22_; }
    SequenceCache& x14() { return x14_; }

    VerificationReport verify_main_theorem(const CaseParams& params, std::int64_t lo,
                                           std::int64_t hi);
    VerificationReport verify_identity(IdentityId id, std::int64_t lo, std::int64_t hi);
    std::vector<VerificationReport> run_full_suite(int max_index);

private:
    template <typename F>
    const Laurent& memo(std::map<std::int64_t, Laurent>& cache, std::int64_t key, F&& f) {
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, f()).first;
        return it->second;
    }

    SequenceCache x22_;
    SequenceCache x14_;
    std::map<std::int64_t, Laurent> p22_, q22_, p14_, tp14_;
};

namespace detail {

inline Laurent numerator(const Laurent& x) {
    if (x.is_zero()) return x;
    return x.shifted(-*x.min_e1(), -*x.min_e2());
}

}  // namespace detail

inline VerificationReport Verifier::verify_main_theorem(const CaseParams& params, std::int64_t lo,
                                                        std::int64_t hi) {
    VerificationReport report;
    report.identity = params == CaseParams{2, 2} ? "MAIN_22" : "MAIN_14";
    report.lo = lo;
    report.hi = hi;
    if (params == CaseParams{2, 2}) {
        for (std::int64_t n = std::max<std::int64_t>(lo, 3); n <= hi; ++n) {
            const Laurent lhs = p22(n);
            const Laurent rhs = x22_.x_at(n) * m22(n).laurent();
            if (lhs != rhs) report.record(n, lhs.to_string(), rhs.to_string());
        }
        return report;
    }
    if (!(params == CaseParams{1, 4})) throw UnsupportedCase();
    for (std::int64_t n = lo; n <= hi; ++n) {
        if (n == 1 || n == 2) continue;
        const auto [sq, oct] = sq_oct(n);
        const Laurent lhs = p14(n);
        const Laurent rhs = x14_.x_at(n) * Laurent::monomial(sq, oct);
        if (lhs != rhs) report.record(n, lhs.to_string(), rhs.to_string());
    }
    return report;
}

inline VerificationReport Verifier::verify_identity(IdentityId id, std::int64_t lo,
                                                    std::int64_t hi) {
    const Laurent x1 = Laurent::x1();
    const Laurent x2 = Laurent::x2();
    const Laurent key14 = pow(x1, 4) + square(x2 + 1);  // x1^4 + (x2+1)^2
    auto mono = [](std::int64_t a, std::int64_t b) { return Laurent::monomial(a, b); };
    auto abs64 = [](std::int64_t v) { return v < 0 ? -v : v; };

    // Each identity is a predicate for the indices where it is stated plus
    // the two sides of the equation; branch selection by the sign of n
    // follows the statements.
    std::function<bool(std::int64_t)> valid;
    std::function<std::pair<Laurent, Laurent>(std::int64_t)> sides;

    switch (id) {
        case IdentityId::MAIN_22:
            return verify_main_theorem(CaseParams{2, 2}, lo, hi);
        case IdentityId::MAIN_14:
            return verify_main_theorem(CaseParams{1, 4}, lo, hi);
        case IdentityId::P_RECUR_22:
            valid = [](std::int64_t n) { return n >= 5; };
            sides = [&](std::int64_t n) {
                return std::pair{p22(n) * p22(n - 2),
                                 square(p22(n - 1)) + mono(2 * n - 6, 2 * n - 8)};
            };
            break;
        case IdentityId::LINEAR_22:
            valid = [](std::int64_t n) { return n >= 4; };
            sides = [&](std::int64_t n) {
                return std::pair{p22(n + 1),
                                 (pow(x1, 2) + pow(x2, 2) + 1) * p22(n) - mono(2, 2) * p22(n - 1)};
            };
            break;
        case IdentityId::ODD_Q_22:
            // The subtracted monomial is x1^{2n-6} x2^{2n-6}: the grids
            // H_{2n-3}, H_{2n-5}, H_{2n-7} are the normalized Chebyshev
            // elements s_{n-2}, s_{n-3}, s_{n-4} scaled by x1^k x2^k, and
            // s_{k-1} s_{k+1} = s_k^2 - 1.
            valid = [](std::int64_t n) { return n >= 4; };
            sides = [&](std::int64_t n) {
                return std::pair{q22(2 * n - 3) * q22(2 * n - 7),
                                 square(q22(2 * n - 5)) - mono(2 * n - 6, 2 * n - 6)};
            };
            break;
        case IdentityId::DISJOINT_22:
            valid = [](std::int64_t n) { return n >= 4; };
            sides = [&](std::int64_t n) {
                const Laurent lhs = match_polynomial(disjoint_union(build_G22(n), build_H(3)));
                return std::pair{lhs, p22(n + 1) + mono(2, 2) * p22(n - 1)};
            };
            break;
        case IdentityId::STEP1_14:
            valid = [](std::int64_t n) { return n != 0 && n != -1; };
            sides = [&](std::int64_t n) {
                return std::pair{p14(2 * n + 1) * p14(2 * n + 3),
                                 p14(2 * n + 2) + mono(abs64(4 * n + 2) - 2, abs64(2 * n) - 1)};
            };
            break;
        case IdentityId::STEP2_14:
            valid = [](std::int64_t n) { return n != 0 && n != 1; };
            sides = [&](std::int64_t n) {
                return std::pair{p14(2 * n) * p14(2 * n + 2),
                                 pow(p14(2 * n + 1), 4) +
                                     mono(abs64(8 * n) - 4, abs64(4 * n - 2) - 2)};
            };
            break;
        case IdentityId::TILDE_LINEAR:
            valid = [](std::int64_t n) { return n >= 2 || n <= -2; };
            sides = [&](std::int64_t n) {
                if (n >= 2)
                    return std::pair{p14(2 * n + 1),
                                     (x2 + 1) * tp14(2 * n + 1) - mono(4, 1) * tp14(2 * n - 1)};
                return std::pair{p14(2 * n + 1), (pow(x1, 4) + x2 + 1) * tp14(2 * n + 3) -
                                                     mono(4, 2) * tp14(2 * n + 5)};
            };
            break;
        case IdentityId::MIXED:
            valid = [](std::int64_t n) { return n >= 2 || n <= -2; };
            sides = [&](std::int64_t n) {
                const Laurent lhs = p14(2 * n - 1) * tp14(2 * n + 1) - p14(2 * n + 1) * tp14(2 * n - 1);
                if (n >= 2) return std::pair{lhs, mono(4 * n - 4, 2 * n - 3)};
                return std::pair{lhs, -(mono(-4 * n, -2 * n + 1) * (x2 + 1))};
            };
            break;
        case IdentityId::TILDES:
            valid = [](std::int64_t n) { return n >= 2 || n <= -2; };
            sides = [&](std::int64_t n) {
                const Laurent lhs = square(tp14(2 * n + 1)) - tp14(2 * n - 1) * tp14(2 * n + 3);
                return std::pair{lhs, n >= 2 ? mono(4 * n - 4, 2 * n - 2) : mono(-4 * n, -2 * n)};
            };
            break;
        case IdentityId::KEYSTEP:
            // The positive branch starts at n = 3, the base case of the
            // induction; at n = 2 it would need an index-1 tilde graph.
            valid = [](std::int64_t n) { return n >= 3 || n <= -2; };
            sides = [&](std::int64_t n) {
                const Laurent lhs =
                    tp14(2 * n + 1) * tp14(2 * n - 1) - tp14(2 * n - 3) * tp14(2 * n + 3);
                const Laurent scale = n >= 2 ? mono(4 * n - 8, 2 * n - 4) : mono(-4 * n, -2 * n);
                return std::pair{lhs, scale * key14};
            };
            break;
        case IdentityId::PROD_DIFF:
            valid = [](std::int64_t n) { return n >= 2 || n <= -1; };
            sides = [&](std::int64_t n) {
                const Laurent lhs = p14(2 * n - 1) * p14(2 * n + 3) - square(p14(2 * n + 1));
                const Laurent scale =
                    n >= 2 ? mono(4 * n - 4, 2 * n - 3) : mono(-4 * n - 4, -2 * n - 1);
                return std::pair{lhs, scale * key14};
            };
            break;
        case IdentityId::THREE_TERM:
            valid = [](std::int64_t n) { return n >= 2 || n <= -1; };
            sides = [&](std::int64_t n) {
                if (n >= 2)
                    return std::pair{p14(2 * n + 3),
                                     key14 * p14(2 * n + 1) - mono(4, 2) * p14(2 * n - 1)};
                return std::pair{p14(2 * n - 1),
                                 key14 * p14(2 * n + 1) - mono(4, 2) * p14(2 * n + 3)};
            };
            break;
        case IdentityId::SEMI_14:
            valid = [](std::int64_t n) { return n >= 2; };
            sides = [&](std::int64_t n) {
                return std::pair{tp14(2 * n + 3),
                                 tp14(2 * n + 1) * tp14(5) - mono(4, 2) * tp14(2 * n - 1)};
            };
            break;
        case IdentityId::RECIPROCITY: {
            VerificationReport report;
            report.identity = "RECIPROCITY";
            report.lo = lo;
            report.hi = hi;
            for (auto [b, c] : {std::pair{2, 2}, std::pair{1, 4}, std::pair{4, 1}}) {
                const VerificationReport sub = check_reciprocity(b, c, lo, hi);
                for (const auto& f : sub.failures)
                    report.record(f.n, "(" + std::to_string(b) + "," + std::to_string(c) + "): " + f.left,
                                  f.right);
            }
            return report;
        }
        case IdentityId::POSITIVITY: {
            VerificationReport report;
            report.identity = "POSITIVITY";
            report.lo = lo;
            report.hi = hi;
            for (std::int64_t n = lo; n <= hi; ++n) {
                if (n == 1 || n == 2) continue;
                for (SequenceCache* cache : {&x22_, &x14_}) {
                    const Laurent num = detail::numerator(cache->x_at(n));
                    if (!is_strictly_positive(num))
                        report.record(n, num.to_string(), "strictly positive coefficients");
                }
            }
            return report;
        }
        case IdentityId::PERIODICITY: {
            VerificationReport report;
            report.identity = "PERIODICITY";
            report.lo = 1;
            report.hi = 3;
            const std::vector<std::pair<CaseParams, int>> expected = {
                {CaseParams{1, 1}, 5}, {CaseParams{1, 2}, 6}, {CaseParams{1, 3}, 8}};
            std::int64_t i = 1;
            for (const auto& [params, want] : expected) {
                const auto got = rank2::detect_period(params, 20);
                if (got != want)
                    report.record(i, got ? "period " + std::to_string(*got) : "no period",
                                  "period " + std::to_string(want));
                ++i;
            }
            return report;
        }
    }

    VerificationReport report;
    report.identity = identity_name(id);
    report.lo = lo;
    report.hi = hi;
    for (std::int64_t n = lo; n <= hi; ++n) {
        if (!valid(n)) continue;
        const auto [lhs, rhs] = sides(n);
        if (lhs != rhs) report.record(n, lhs.to_string(), rhs.to_string());
    }
    return report;
}

// Runs every identity over its maximal range with all referenced sequence
// and graph indices inside [-max_index, max_index].
inline std::vector<VerificationReport> Verifier::run_full_suite(int max_index) {
    if (max_index < 5) throw std::invalid_argument("run_full_suite: max_index must be >= 5");
    const std::int64_t m = max_index;
    std::vector<VerificationReport> reports;
    reports.push_back(verify_identity(IdentityId::MAIN_22, 3, m));
    reports.push_back(verify_identity(IdentityId::P_RECUR_22, 5, m));
    reports.push_back(verify_identity(IdentityId::LINEAR_22, 4, m - 1));
    reports.push_back(verify_identity(IdentityId::ODD_Q_22, 4, m));
    reports.push_back(verify_identity(IdentityId::DISJOINT_22, 4, m - 1));
    reports.push_back(verify_identity(IdentityId::MAIN_14, -m, m));
    reports.push_back(verify_identity(IdentityId::STEP1_14, (-m - 1) / 2, (m - 3) / 2));
    reports.push_back(verify_identity(IdentityId::STEP2_14, -m / 2, (m - 2) / 2));
    reports.push_back(verify_identity(IdentityId::TILDE_LINEAR, (-m - 1) / 2, (m - 1) / 2));
    reports.push_back(verify_identity(IdentityId::MIXED, (1 - m) / 2, (m - 1) / 2));
    reports.push_back(verify_identity(IdentityId::TILDES, (1 - m) / 2, (m - 3) / 2));
    reports.push_back(verify_identity(IdentityId::KEYSTEP, (3 - m) / 2, (m - 3) / 2));
    reports.push_back(verify_identity(IdentityId::PROD_DIFF, (1 - m) / 2, (m - 3) / 2));
    reports.push_back(verify_identity(IdentityId::THREE_TERM, (1 - m) / 2, (m - 3) / 2));
    reports.push_back(verify_identity(IdentityId::SEMI_14, 2, (m - 3) / 2));
    reports.push_back(verify_identity(IdentityId::RECIPROCITY, 0, m - 3));
    reports.push_back(verify_identity(IdentityId::POSITIVITY, -m, m));
    reports.push_back(verify_identity(IdentityId::PERIODICITY, 1, 3));
    return reports;
}

}  // namespace rank2
