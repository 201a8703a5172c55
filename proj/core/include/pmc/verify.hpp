#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pmc {

struct SuiteResult {
    std::string name;
    long checks = 0;
    long failures = 0;
    // Up to a few minimal failing witnesses, rendered as text.
    std::vector<std::string> witnesses;
    double seconds = 0;
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    bool ok() const;
};

// Known suite names: ring, indices, duality, stability, ext, moduli.
const std::vector<std::string>& verification_suites();

// "all" runs every suite. Throws ParameterError for unknown names.
VerifyReport run_verification(const std::string& suite, std::uint64_t seed);

}  // namespace pmc
