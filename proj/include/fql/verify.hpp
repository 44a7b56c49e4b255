#pragma once

#include <string>
#include <vector>

#include "fql/ffield.hpp"

namespace fql {

// One battery run replaying the special-value identities at the requested
// window sizes. Checks that the parameters cannot certify (order margins,
// enumeration blowup at large q) are reported as skipped, not failed.
struct VerifyConfig {
    int p = 2;
    int e = 1;
    long long prec = 24;  // theta-window
    int Nt = 6;           // t-window
    int Nu = 16;          // u-window
    int deg_cutoff = -1;  // direct-sum degree cutoff; -1 derives from prec
    int ext_r = 2;        // largest extension degree for the Dirichlet legs
};

struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;  // first bad coefficient, or the reason for a skip
};

std::vector<CheckResult> run_verify(const VerifyConfig& cfg);

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass && !r.skipped) return false;
    return true;
}

}  // namespace fql
