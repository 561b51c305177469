#pragma once

// Pass/fail record for an identity checked over an integer index range.
// Shared by the recurrence engine (reciprocity) and the verifier.

#include <cstdint>
#include <string>
#include <vector>

namespace rank2 {

struct VerificationReport {
    struct Failure {
        std::int64_t n;
        std::string left;
        std::string right;
    };

    std::string identity;
    std::int64_t lo = 0;
    std::int64_t hi = -1;  // empty range by default
    bool passed = true;
    std::vector<Failure> failures;

    void record(std::int64_t n, std::string left, std::string right) {
        passed = false;
        failures.push_back({n, std::move(left), std::move(right)});
    }
};

}  // namespace rank2
