#pragma once

#include <optional>
#include <string>
#include <vector>

namespace wreathfock {

struct VerifyResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    std::optional<unsigned> r;
    std::optional<int> n;
    unsigned seed = 1;
};

// Suite names in acceptance order: dims, heisenberg, isom1, jm, vertex, gh,
// npoint, taufact, toda, graded, mckay, generators.
const std::vector<std::string>& verify_suite_names();

// Runs one suite ("all" runs every suite in order). Options narrow a suite
// to a single (r, n) where that makes sense; defaults cover the full
// acceptance ranges.
std::vector<VerifyResult> run_verify_suite(const std::string& name, const VerifyOptions& opts);

}  // namespace wreathfock
