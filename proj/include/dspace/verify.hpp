#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dspace/json_io.hpp"

namespace dspace {

struct VerifyOptions {
    std::uint64_t seed = 42;
    /// Extra type labels for the optional volume checks, e.g. "A4", "D4".
    std::vector<std::string> include;
};

struct CriterionResult {
    std::string id;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::vector<CriterionResult> criteria;
    bool all_passed() const;
};

/// Runs AC-1..AC-9 plus one check per included type. The callback sees
/// each result as soon as it is known.
VerifyReport run_verify(const VerifyOptions& options,
                        const std::function<void(const CriterionResult&)>& on_result = {});

/// Deterministic: timings are left out.
Json verify_json(const VerifyReport& report);

}  // namespace dspace
