#include <catch2/catch_amalgamated.hpp>

#include "rank2/closed_forms.hpp"
#include "rank2/families.hpp"
#include "rank2/matching.hpp"
#include "rank2/recurrence.hpp"

using namespace rank2;

namespace {
const Laurent x1 = Laurent::x1();
const Laurent x2 = Laurent::x2();
}  // namespace

TEST_CASE("m22") {
    REQUIRE(m22(4) == Monomial{2, 1});
    REQUIRE(m22(3) == Monomial{1, 0});
    REQUIRE(m22(5) == Monomial{3, 2});
    REQUIRE_THROWS_AS(m22(2), IndexOutOfFamily);
}

TEST_CASE("sq_oct") {
    REQUIRE(sq_oct(7) == std::pair<std::int64_t, std::int64_t>{5, 2});
    REQUIRE(sq_oct(-2) == std::pair<std::int64_t, std::int64_t>{4, 3});
    REQUIRE(sq_oct(6) == std::pair<std::int64_t, std::int64_t>{8, 3});
    REQUIRE(sq_oct(0) == std::pair<std::int64_t, std::int64_t>{0, 1});
    REQUIRE(sq_oct(3) == std::pair<std::int64_t, std::int64_t>{1, 0});
    REQUIRE_THROWS_AS(sq_oct(1), IndexOutOfFamily);
    for (std::int64_t n = -30; n <= 30; ++n) {
        if (n == 1 || n == 2) continue;
        const auto [sq, oct] = sq_oct(n);
        REQUIRE(sq >= 0);
        REQUIRE(oct >= 0);
    }
}

TEST_CASE("binomial") {
    REQUIRE(binomial(5, 2) == 10);
    REQUIRE(binomial(5, 0) == 1);
    REQUIRE(binomial(4, 7) == 0);
    REQUIRE(binomial(-1, 0) == 1);
    REQUIRE(binomial(-1, 1) == 0);
    REQUIRE(binomial(3, -2) == 0);
    REQUIRE(binomial(60, 30) == Int("118264581564861424"));
}

TEST_CASE("explicit (2,2) formula") {
    REQUIRE(explicit_x22(3) == div_exact(pow(x2, 2) + 1, x1));
    REQUIRE(explicit_x22(0) == div_exact(pow(x1, 2) + 1, x2));
    REQUIRE(explicit_x22(4) ==
            div_exact(pow(x2, 4) + 2 * pow(x2, 2) + 1 + pow(x1, 2), Laurent::monomial(2, 1)));
    REQUIRE_THROWS_AS(explicit_x22(1), IndexOutOfFamily);

    SequenceCache cache(CaseParams{2, 2});
    for (std::int64_t n = -12; n <= 15; ++n) {
        if (n == 1 || n == 2) continue;
        REQUIRE(explicit_x22(n) == cache.x_at(n));
    }
}

TEST_CASE("subset counts: formula against brute force") {
    REQUIRE(subset_count_bruteforce({5, 1, 1}) == 2);  // {1,4} and {2,5}
    REQUIRE(subset_count_formula({5, 1, 1}) == 2);
    REQUIRE(subset_count_bruteforce({3, 2, 0}) == 1);  // only {1,3}
    REQUIRE(subset_count_bruteforce({2, 1, 1}) == 0);  // {1,2} is consecutive
    REQUIRE(subset_count_formula({12, 0, 0}) == 1);
    REQUIRE(subset_count_formula({13, 7, 0}) == 1);  // all odd numbers of {1..13}

    for (int N = 0; N <= 14; ++N)
        for (int q = 0; q <= (N + 1) / 2 + 1; ++q)
            for (int r = 0; r <= N / 2 + 1; ++r)
                REQUIRE(subset_count_formula({N, q, r}) == subset_count_bruteforce({N, q, r}));

    REQUIRE_THROWS_AS(subset_count_bruteforce({25, 0, 0}), GroundSetTooLarge);
}

TEST_CASE("matchings of the grid biject onto restricted subsets") {
    for (int m = 1; m <= 12; ++m) {
        const Laurent poly = match_polynomial(build_H(m));
        for (int q = 0; q <= m / 2 + 1; ++q)
            for (int r = 0; r <= m / 2 + 1; ++r)
                REQUIRE(poly.coeff(2 * r, 2 * q) == subset_count_bruteforce({m - 1, q, r}));
    }
}

TEST_CASE("chebyshev elements") {
    REQUIRE(chebyshev_s(CaseParams{2, 2}, 0) == Laurent(1));
    REQUIRE(chebyshev_s(CaseParams{1, 4}, 0) == Laurent(1));

    const Laurent s1_22 = chebyshev_s(CaseParams{2, 2}, 1);
    REQUIRE(s1_22 == div_exact(pow(x1, 2) + pow(x2, 2) + 1, Laurent::monomial(1, 1)));
    const Laurent s1_14 = chebyshev_s(CaseParams{1, 4}, 1);
    REQUIRE(s1_14 == div_exact(pow(x1, 4) + square(x2 + 1), Laurent::monomial(2, 1)));

    REQUIRE(chebyshev_s(CaseParams{1, 4}, 2) == square(s1_14) - 1);
    for (int n = 2; n <= 8; ++n) {
        REQUIRE(chebyshev_s(CaseParams{2, 2}, n) ==
                s1_22 * chebyshev_s(CaseParams{2, 2}, n - 1) - chebyshev_s(CaseParams{2, 2}, n - 2));
    }
    REQUIRE_THROWS_AS(chebyshev_s(CaseParams{1, 3}, 1), UnsupportedCase);
    REQUIRE_THROWS_AS(chebyshev_s(CaseParams{1, 4}, -1), std::invalid_argument);
}

TEST_CASE("semicanonical elements match the tilde matching polynomials") {
    for (int n = 0; n <= 6; ++n) {
        REQUIRE(chebyshev_s(CaseParams{1, 4}, n) * Laurent::monomial(2 * n, n) ==
                match_polynomial(build_tildeG14(2 * n + 3)));
    }
}

TEST_CASE("semicanonical elements match the odd grid strips") {
    for (int n = 0; n <= 8; ++n) {
        REQUIRE(chebyshev_s(CaseParams{2, 2}, n) * Laurent::monomial(n, n) ==
                match_polynomial(build_H(2 * n + 1)));
    }
}
