#include "collabgain/cli/commands.hpp"

#include <ostream>
#include <string>

#include "collabgain/bounds.hpp"
#include "collabgain/energy_resource.hpp"
#include "collabgain/geometry.hpp"
#include "collabgain/rate_alloc.hpp"
#include "collabgain/sweep.hpp"

namespace collabgain::cli {
namespace {

Report to_json(const Allocation& a) {
    return Report{{"protocol", to_string(a.protocol)},
                  {"beta", a.beta},
                  {"base_rate", a.base_rate},
                  {"rate2", a.rate2},
                  {"sum_rate", a.sum_rate}};
}

Report to_json(const GainReport& r) {
    return Report{{"ncp", to_json(r.ncp)}, {"cp", to_json(r.cp)}, {"gain", r.gain}, {"collaborate", r.collaborate}};
}

Report to_json(const LinkGains& g) {
    return Report{{"h12", g.h12()}, {"h13", g.h13()}, {"h23", g.h23()}};
}

Report to_json(const BoundPair& b) {
    Report out{{"lower", b.lower}, {"upper", b.upper}};
    out["beta_at_bound"] = b.beta_at_bound ? Report(*b.beta_at_bound) : Report(nullptr);
    out["degenerate"] = b.degenerate;
    return out;
}

Report to_json(const SelectionDecision& d) {
    Report out{{"protocol", to_string(d.protocol)}};
    out["relay_id"] = d.relay_id ? Report(*d.relay_id) : Report(nullptr);
    out["criterion_value"] = d.criterion_value;
    out["exact_gain"] = d.exact_gain ? Report(*d.exact_gain) : Report(nullptr);
    out["high_tern_hint"] = d.high_tern_hint;
    return out;
}

void render(std::ostream& out, const Report& node, const std::string& path) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) render(out, value, path.empty() ? key : path + "." + key);
    } else if (node.is_array()) {
        for (size_t i = 0; i < node.size(); ++i) render(out, node[i], path + "[" + std::to_string(i) + "]");
    } else if (node.is_number_float()) {
        out << path << ": " << format_number(node.get<double>()) << '\n';
    } else if (node.is_string()) {
        out << path << ": " << node.get<std::string>() << '\n';
    } else {
        out << path << ": " << node.dump() << '\n';
    }
}

}  // namespace

Report gain_report(const Scenario& s) {
    const LinkGains g = s.link_gains();
    const OperatingPoint op = s.operating();
    Report out{{"gains", to_json(g)}};
    Report body = to_json(collaboration_gain(g, op));
    for (auto& [key, value] : body.items()) out[key] = value;
    return out;
}

Report energy_report(const Scenario& s) {
    const LinkGains g = s.link_gains();
    const double k = s.rate_ratio();
    const double rate = s.required_rate();
    const EnergySolution ncp = min_tern(ProtocolKind::NCP, g, k, rate);
    const EnergySolution cp = min_tern(ProtocolKind::CP, g, k, rate);
    return Report{{"rate", rate},
                  {"ncp", {{"epsilon_min", ncp.epsilon_min}, {"beta", ncp.beta}}},
                  {"cp", {{"epsilon_min", cp.epsilon_min}, {"beta", cp.beta}}},
                  {"energy_gain", ncp.epsilon_min / cp.epsilon_min}};
}

Report resource_report(const Scenario& s) {
    const LinkGains g = s.link_gains();
    const OperatingPoint op = s.operating();
    const double rate = s.required_rate();
    Report out{{"rate", rate}};
    std::optional<double> totals[2];
    for (ProtocolKind p : {ProtocolKind::NCP, ProtocolKind::CP}) {
        Report entry{{"bound", feasibility_bound(p, g, op)}, {"feasible", feasible(p, g, op, rate)}};
        if (entry["feasible"].get<bool>()) {
            const ResourceUsage u = resource_usage(p, g, op, rate);
            entry["beta1"] = u.beta1;
            entry["beta2"] = u.beta2;
            entry["total"] = u.total;
            totals[p == ProtocolKind::CP] = u.total;
        }
        out[p == ProtocolKind::NCP ? "ncp" : "cp"] = entry;
    }
    out["resource_ratio"] = totals[0] && totals[1] ? Report(*totals[0] / *totals[1]) : Report(nullptr);
    return out;
}

Report bounds_report(const Scenario& s) {
    const LinkGains g = s.link_gains();
    const OperatingPoint op = s.operating();
    const Allocation ncp = ncp_allocate(g, op);
    const Allocation cp = cp_allocate(g, op);
    return Report{{"ncp",
                   {{"exact_base_rate", ncp.base_rate},
                    {"high_tern", to_json(ncp_bounds_high_tern(g, op))},
                    {"low_tern", to_json(ncp_bounds_low_tern(g, op))}}},
                  {"cp",
                   {{"exact_base_rate", cp.base_rate},
                    {"high_tern", to_json(cp_bounds_high_tern(g, op))},
                    {"low_tern", to_json(cp_bounds_low_tern(g, op))}}},
                  {"gain", cp.base_rate / ncp.base_rate},
                  {"low_tern_gain_limit", low_tern_gain_limit(g, op.k())},
                  {"high_tern_gain_limit", high_tern_gain_limit(op.k())},
                  {"small_k_gain_slope", small_k_gain_slope(g, op.epsilon())}};
}

Report select_report(const Scenario& s, std::optional<SelectionMode> mode, bool exhaustive) {
    const SelectionMode m = mode.value_or(s.mode.value_or(SelectionMode::Rate));
    Report out{{"mode", m == SelectionMode::Rate ? "rate" : "resource"}};
    if (s.flows) {
        Report flows = Report::array();
        const auto outcomes = evaluate_network(*s.flows, m);
        for (size_t i = 0; i < outcomes.size(); ++i) {
            Report entry{{"source", (*s.flows)[i].source}, {"destination", (*s.flows)[i].destination}};
            if (outcomes[i].ok()) {
                entry["decision"] = to_json(outcomes[i].decision());
            } else {
                entry["error"] = outcomes[i].error();
            }
            flows.push_back(entry);
        }
        out["flows"] = flows;
        return out;
    }
    const double h_sd = s.link_gains().h13();
    const OperatingPoint op = s.operating();
    const SelectionDecision d = m == SelectionMode::Rate
                                    ? select_relay_rate(h_sd, s.candidates, op, exhaustive)
                                    : select_relay_resource(h_sd, s.candidates, op, s.required_rate());
    out["decision"] = to_json(d);
    return out;
}

Report placement_report(const Scenario& s) {
    if (!s.placement) throw ValidationError("scenario: placement command needs \"placement\"");
    const LinkGains g = gains_from_placement(*s.placement);
    const OperatingPoint op = s.operating();
    const double eta = s.placement->eta;
    return Report{{"gains", to_json(g)},
                  {"gain", collaboration_gain(g, op).gain},
                  {"low_tern_gain_limit", low_tern_gain_limit(g, op.k())},
                  {"optimal_relay_location", optimal_relay_location(op.k(), eta)},
                  {"max_geometric_gain", max_geometric_gain(op.k(), eta)}};
}

void render_text(std::ostream& out, const Report& report) { render(out, report, ""); }

}  // namespace collabgain::cli
