// Verification suites behind `galeroot verify` and the acceptance runner.
//
// Each suite checks one family of claims at pinned tolerances and returns
// per-check diagnostics.  The "acceptance" suite runs everything at the
// default scales.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace galeroot {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int d = -1;                    // degree override, where a suite accepts one
    std::string basis = "";       // basis override
    long count = -1;               // sample-count knob
    int grid = -1;                 // grid-resolution knob
    std::uint64_t seed = 20260810; // all randomness is seeded
};

const std::vector<std::string>& suite_names();

/// Runs one suite ("all" / "acceptance" run every suite in order).
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace galeroot
