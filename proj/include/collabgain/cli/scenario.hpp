#pragma once

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "collabgain/error.hpp"
#include "collabgain/geometry.hpp"
#include "collabgain/model.hpp"
#include "collabgain/relay_select.hpp"

namespace collabgain::cli {

class IoError : public Error {
public:
    using Error::Error;
};

/// Parsed and schema-checked scenario document. Field presence is kept so each
/// command can demand what it needs.
struct Scenario {
    std::optional<LinkGains> gains;
    std::optional<Placement> placement;
    std::optional<double> epsilon;
    std::optional<double> k;
    std::optional<double> rate;
    std::vector<RelayCandidate> candidates;
    std::optional<std::vector<Flow>> flows;
    std::optional<SelectionMode> mode;

    /// Gains given directly or derived from the placement.
    LinkGains link_gains() const;
    OperatingPoint operating() const;
    double rate_ratio() const;
    double required_rate() const;
};

/// Throws ValidationError on malformed JSON or any schema violation.
Scenario parse_scenario(std::string_view text);

/// Throws IoError when the file cannot be read.
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace collabgain::cli
