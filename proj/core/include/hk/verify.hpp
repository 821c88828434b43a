#pragma once

#include "hk/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hk {

struct VerifyOptions {
    unsigned long long seed = 0x5eedULL;
    int sextic_samples = 25;
    bool run_slow = true;  // include the 2^21 class enumeration
};

struct Suite {
    std::string name;
    std::function<Report()> run;
};

// The full reproduction suite, one entry per named family of checks.
std::vector<Suite> all_suites(const VerifyOptions& opt);

// Runs every suite (in parallel), merging reports deterministically by name.
Report verify_all(const VerifyOptions& opt);

}  // namespace hk
