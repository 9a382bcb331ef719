#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "collabgain/model.hpp"

namespace collabgain {

struct RelayCandidate {
    std::string id;
    double h_sr;  ///< source -> candidate, plays h12
    double h_rd;  ///< candidate -> destination, plays h23
};

struct SelectionDecision {
    ProtocolKind protocol;
    std::optional<std::string> relay_id;  ///< present iff protocol == CP
    double criterion_value;               ///< score (rate mode) or total resource usage
    std::optional<double> exact_gain;
    /// eps times the smallest gain involved exceeds 10: the regime where the
    /// rough high-TERN guideline applies. Informational only.
    bool high_tern_hint = false;
};

struct Flow {
    std::string source;
    std::string destination;
    double h_sd;
    double k;
    double epsilon;
    std::optional<double> rate;  ///< required in resource mode
    std::vector<RelayCandidate> candidates;
};

enum class SelectionMode { Rate, Resource };

struct FlowOutcome {
    std::variant<SelectionDecision, std::string> result;  ///< decision or error message

    bool ok() const noexcept { return std::holds_alternative<SelectionDecision>(result); }
    const SelectionDecision& decision() const { return std::get<SelectionDecision>(result); }
    const std::string& error() const { return std::get<std::string>(result); }
};

/// min{h_sr, h_rd k / (k + 1)} / h_sd: the low-TERN gain of relaying via cand.
double rate_energy_score(double h_sd, const RelayCandidate& cand, double k);

/// Ranks candidates by score (ties by id), confirms the top one with the exact
/// collaboration gain and falls back to NCP unless it exceeds one. With
/// `exhaustive`, every candidate's exact gain is computed and the best wins.
SelectionDecision select_relay_rate(double h_sd, const std::vector<RelayCandidate>& candidates,
                                    const OperatingPoint& op, bool exhaustive = false);

/// Feasibility filter, then least total resource usage over NCP and CP with
/// every feasible candidate. Throws InfeasibleError when nothing is feasible.
SelectionDecision select_relay_resource(double h_sd, const std::vector<RelayCandidate>& candidates,
                                        const OperatingPoint& op, double rate);

/// Independent per-flow selection; errors are reported per flow.
std::vector<FlowOutcome> evaluate_network(const std::vector<Flow>& flows, SelectionMode mode);

}  // namespace collabgain
