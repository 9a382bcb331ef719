#pragma once

#include <iosfwd>
#include <optional>

#include <json.hpp>

#include "collabgain/cli/scenario.hpp"

namespace collabgain::cli {

using Report = nlohmann::ordered_json;

Report gain_report(const Scenario& s);
Report energy_report(const Scenario& s);
Report resource_report(const Scenario& s);
Report bounds_report(const Scenario& s);
Report select_report(const Scenario& s, std::optional<SelectionMode> mode, bool exhaustive);
Report placement_report(const Scenario& s);

/// One "path: value" line per leaf, in document order.
void render_text(std::ostream& out, const Report& report);

}  // namespace collabgain::cli
