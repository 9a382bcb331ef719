#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace collabgain::cli {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed;
    bool informational;  ///< reported but never fails the run
    std::string detail;
};

/// sandwich, duality, limits, placement, selection, oracle, inequality.
const std::vector<std::string_view>& suite_names();

/// Runs one suite, or every suite for "all". Throws ValidationError for an
/// unknown name.
std::vector<CheckResult> run_suite(std::string_view suite);

}  // namespace collabgain::cli
