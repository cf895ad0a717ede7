#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qwalk/pathsum.hpp"

namespace qwalk {

struct VerifyOptions {
    int max_n = 12;
    std::uint64_t seed = 2002;
    int random_coins = 5;
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;      // largest observed error
    double tolerance = 0.0;  // pass threshold for `worst`
    std::string detail;
};

/// Cross-checks every closed form against its independent route (raw matrix
/// products, word enumeration, direct evolution) on Hadamard plus
/// `random_coins` random coins.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace qwalk
