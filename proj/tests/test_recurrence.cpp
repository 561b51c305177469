#include <catch2/catch_amalgamated.hpp>

#include "rank2/laurent.hpp"
#include "rank2/recurrence.hpp"

using rank2::CaseParams;
using rank2::Int;
using rank2::Laurent;
using rank2::SequenceCache;

namespace {
const Laurent x1 = Laurent::x1();
const Laurent x2 = Laurent::x2();
}  // namespace

TEST_CASE("generators") {
    SequenceCache cache(CaseParams{1, 4});
    REQUIRE(cache.x_at(1) == x1);
    REQUIRE(cache.x_at(2) == x2);
}

TEST_CASE("forward values match the (1,4) table") {
    SequenceCache cache(CaseParams{1, 4});
    REQUIRE(cache.x_at(3) == div_exact(x2 + 1, x1));
    REQUIRE(cache.x_at(4) == div_exact(pow(x2 + 1, 4) + pow(x1, 4), Laurent::monomial(4, 1)));
    REQUIRE(cache.x_at(5) == div_exact(pow(x2 + 1, 3) + pow(x1, 4), Laurent::monomial(3, 1)));
}

TEST_CASE("backward values match the (1,4) table") {
    SequenceCache cache(CaseParams{1, 4});
    REQUIRE(cache.x_at(0) == div_exact(pow(x1, 4) + 1, x2));
    REQUIRE(cache.x_at(-1) == div_exact(x2 + 1 + pow(x1, 4), Laurent::monomial(1, 1)));
    REQUIRE(cache.x_at(-3) ==
            div_exact(pow(x2 + 1, 3) + 2 * pow(x1, 4) + 3 * pow(x1, 4) * x2 + pow(x1, 8),
                      Laurent::monomial(3, 2)));
}

TEST_CASE("the (2,2) case") {
    SequenceCache cache(CaseParams{2, 2});
    REQUIRE(cache.x_at(4) ==
            div_exact(pow(x2, 4) + 2 * pow(x2, 2) + 1 + pow(x1, 2), Laurent::monomial(2, 1)));
    REQUIRE(cache.eval_at_ones(3) == 2);
    REQUIRE(cache.eval_at_ones(4) == 5);
    REQUIRE(cache.eval_at_ones(5) == 13);
    REQUIRE(cache.eval_at_ones(6) == 34);
    REQUIRE(cache.eval_at_ones(7) == 89);
}

TEST_CASE("evaluation at (1,1) reproduces the integer sequences") {
    SequenceCache cache(CaseParams{1, 4});
    REQUIRE(cache.eval_at_ones(6) == 386);
    REQUIRE(cache.eval_at_ones(13) == 4729);
    REQUIRE(cache.eval_at_ones(-8) == 493697);
    REQUIRE(cache.eval_at_ones(-11) == 7369);
}

TEST_CASE("defining relation holds for every computed triple") {
    for (const CaseParams params : {CaseParams{1, 4}, CaseParams{2, 2}}) {
        SequenceCache cache(params);
        for (std::int64_t n = -10; n <= 12; ++n) {
            const auto e = static_cast<std::uint64_t>((n % 2) != 0 ? params.b : params.c);
            REQUIRE(cache.x_at(n) * cache.x_at(n - 2) == pow(cache.x_at(n - 1), e) + 1);
        }
    }
}

TEST_CASE("Laurentness over bc <= 4") {
    for (const CaseParams params : {CaseParams{1, 1}, CaseParams{1, 2}, CaseParams{2, 1},
                                    CaseParams{1, 3}, CaseParams{3, 1}, CaseParams{1, 4},
                                    CaseParams{4, 1}, CaseParams{2, 2}}) {
        SequenceCache cache(params);
        REQUIRE_NOTHROW(cache.x_at(30));
        REQUIRE_NOTHROW(cache.x_at(-30));
    }
}

TEST_CASE("periodicity in finite type") {
    REQUIRE(rank2::detect_period(CaseParams{1, 1}, 20) == 5);
    REQUIRE(rank2::detect_period(CaseParams{1, 2}, 20) == 6);
    REQUIRE(rank2::detect_period(CaseParams{2, 1}, 20) == 6);
    REQUIRE(rank2::detect_period(CaseParams{1, 3}, 20) == 8);
    REQUIRE_FALSE(rank2::detect_period(CaseParams{2, 2}, 12).has_value());
    REQUIRE_FALSE(rank2::detect_period(CaseParams{1, 4}, 12).has_value());
}

TEST_CASE("reciprocity") {
    SECTION("asymmetric case, both directions") {
        const auto report = rank2::check_reciprocity(1, 4, 0, 8);
        REQUIRE(report.passed);
        REQUIRE(report.failures.empty());
        REQUIRE(rank2::check_reciprocity(4, 1, 0, 8).passed);
    }
    SECTION("(2,2) base case spelled out") {
        SequenceCache cache(CaseParams{2, 2});
        REQUIRE(cache.x_at(0) == div_exact(pow(x1, 2) + 1, x2));
        REQUIRE(cache.x_at(0) == swap_vars(cache.x_at(3)));
        REQUIRE(rank2::check_reciprocity(2, 2, 0, 8).passed);
    }
    SECTION("periodic case") { REQUIRE(rank2::check_reciprocity(1, 1, 0, 10).passed); }
    SECTION("a failing comparison is reported with both sides") {
        // Deliberately mispaired: (1,4) backward against (1,4) forward.
        rank2::VerificationReport report;
        SequenceCache fwd(CaseParams{1, 4});
        for (std::int64_t n = 0; n <= 3; ++n) {
            const Laurent lhs = fwd.x_at(-n);
            const Laurent rhs = swap_vars(fwd.x_at(n + 3));
            if (lhs != rhs) report.record(n, lhs.to_string(), rhs.to_string());
        }
        REQUIRE_FALSE(report.passed);
        REQUIRE_FALSE(report.failures.empty());
        REQUIRE_FALSE(report.failures.front().left.empty());
    }
}

TEST_CASE("interleaved subsequences at (1,1) are increasing") {
    SequenceCache cache(CaseParams{1, 4});
    auto increasing = [&](std::int64_t first, std::int64_t step, int count) {
        Int prev = cache.eval_at_ones(first);
        for (int i = 1; i < count; ++i) {
            const Int next = cache.eval_at_ones(first + step * i);
            if (next <= prev) return false;
            prev = next;
        }
        return true;
    };
    REQUIRE(increasing(3, 2, 6));    // x_{2n+1}: 2, 9, 43, ...
    REQUIRE(increasing(4, 2, 6));    // x_{2n+2}: 17, 386, ...
    REQUIRE(increasing(0, -2, 6));   // x_{-2n+2}: 2, 41, 937, ...
    REQUIRE(increasing(-1, -2, 6));  // x_{-2n+1}: 3, 14, 67, ...
}

TEST_CASE("parameter validation") {
    REQUIRE_THROWS_AS(CaseParams(0, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(rank2::detect_period(CaseParams{1, 1}, 0), std::invalid_argument);
}
