#include <catch2/catch_amalgamated.hpp>

#include "rank2/report_io.hpp"
#include "rank2/verify.hpp"

using namespace rank2;

namespace {
const Laurent x1 = Laurent::x1();
const Laurent x2 = Laurent::x2();
}  // namespace

TEST_CASE("identity names round-trip") {
    for (const auto& [id, name] : identity_names()) {
        REQUIRE(identity_name(id) == name);
        REQUIRE(identity_from_name(name) == id);
    }
    REQUIRE_THROWS_AS(identity_from_name("NOPE"), UnknownIdentity);
}

TEST_CASE("main theorem, both cases") {
    Verifier v;
    const auto r22 = v.verify_main_theorem(CaseParams{2, 2}, 3, 12);
    REQUIRE(r22.passed);
    const auto r14 = v.verify_main_theorem(CaseParams{1, 4}, -9, 13);
    REQUIRE(r14.passed);
}

TEST_CASE("tabulated coefficients of p_6") {
    Verifier v;
    const Laurent& p6 = v.p14(6);
    REQUIRE(p6.coeff(4, 2) == 34);
    REQUIRE(p6.coeff(4, 3) == 36);
    REQUIRE(p6.coeff(12, 0) == 1);
    REQUIRE(p6.term_count() == 19);  // (x2+1)^8 contributes 9, plus 10 listed terms
}

TEST_CASE("quoted base cases") {
    Verifier v;
    SECTION("square-product relation for the tilde family") {
        REQUIRE(square(v.tp14(5)) - v.tp14(3) * v.tp14(7) == Laurent::monomial(4, 2));
    }
    SECTION("staggered product relation") {
        REQUIRE(v.tp14(5) * v.tp14(7) - v.tp14(3) * v.tp14(9) ==
                Laurent::monomial(4, 2) * (pow(x1, 4) + square(x2 + 1)));
    }
    SECTION("grid quadratic relation at n = 5") {
        REQUIRE(v.p22(5) * v.p22(3) == square(v.p22(4)) + Laurent::monomial(4, 2));
    }
}

TEST_CASE("each identity passes over a midsize range") {
    Verifier v;
    // Identities indexed by half the sequence index reach graphs around
    // G_{2n+3}, so +-4 here exercises the families out to index 11.
    for (const auto& [id, name] : identity_names()) {
        const auto report = v.verify_identity(id, -4, 4);
        INFO(name);
        REQUIRE(report.passed);
        REQUIRE(report.failures.empty());
    }
    REQUIRE(v.verify_identity(IdentityId::P_RECUR_22, 5, 12).passed);
    REQUIRE(v.verify_identity(IdentityId::ODD_Q_22, 4, 10).passed);
}

TEST_CASE("identity ranges skip out-of-domain indices silently") {
    Verifier v;
    const auto report = v.verify_identity(IdentityId::STEP1_14, -1, 0);
    REQUIRE(report.passed);  // the whole range is excluded, nothing to check
}

TEST_CASE("full suite at max 6") {
    Verifier v;
    const auto reports = v.run_full_suite(6);
    REQUIRE(reports.size() == 18);
    for (const auto& r : reports) {
        INFO(r.identity);
        REQUIRE(r.passed);
    }
    REQUIRE_THROWS_AS(v.run_full_suite(4), std::invalid_argument);
}

TEST_CASE("failures carry both sides in canonical form") {
    VerificationReport report;
    report.identity = "DEMO";
    const Laurent lhs = pow(x1, 2) + 1;
    const Laurent rhs = pow(x1, 2) - 1;
    if (lhs != rhs) report.record(7, lhs.to_string(), rhs.to_string());
    REQUIRE_FALSE(report.passed);
    REQUIRE(report.failures.size() == 1);
    REQUIRE(report.failures[0].n == 7);
    REQUIRE(report.failures[0].left == "x1^2 + 1");
    REQUIRE(report.failures[0].right == "x1^2 - 1");

    const auto j = report_to_json(report);
    REQUIRE(j["identity"] == "DEMO");
    REQUIRE(j["passed"] == false);
    REQUIRE(j["failures"][0]["n"] == 7);
    REQUIRE(j["failures"][0]["left"] == "x1^2 + 1");
}

TEST_CASE("report json shape") {
    Verifier v;
    const auto reports = v.run_full_suite(5);
    const auto j = reports_to_json(reports);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == reports.size());
    for (const auto& entry : j) {
        REQUIRE(entry.contains("identity"));
        REQUIRE(entry.contains("range"));
        REQUIRE(entry["passed"] == true);
        REQUIRE(entry["failures"].empty());
    }
}
