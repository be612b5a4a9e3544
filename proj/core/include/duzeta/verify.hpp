#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace duzeta {

struct VerifyOptions {
    std::size_t max_ell = 60;       // zeta cross-method / RHA / interlacing range
    std::uint32_t max_prime = 97;   // p-integrality and unit-check range
    std::size_t theta_order = 200;  // truncation order for theta-map checks
    unsigned jobs = 1;
    std::string corpus_dir;         // enumerator corpus; empty skips corpus checks
};

struct CheckEntry {
    std::string name;
    nlohmann::json params;
    bool verdict = false;
    bool expected_exclusion = false;  // documented theorem exclusion, not a failure
    nlohmann::json witness;
};

struct VerificationReport {
    std::vector<CheckEntry> entries;
    bool overall_verdict = false;

    nlohmann::json to_json() const;
    std::string to_string() const;  // stable serialization (2-space indent)
};

/// Runs the whole verification suite. Entries appear in a fixed order and the
/// result is byte-stable across runs and job counts.
VerificationReport run_verification(const VerifyOptions& opts);

} // namespace duzeta
