#include "collabgain/relay_select.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "collabgain/energy_resource.hpp"
#include "collabgain/error.hpp"
#include "collabgain/rate_alloc.hpp"

namespace collabgain {
namespace {

bool alive(const RelayCandidate& c) {
    return std::isfinite(c.h_sr) && std::isfinite(c.h_rd) && c.h_sr > 0.0 && c.h_rd > 0.0;
}

void require_direct(double h_sd) {
    if (!std::isfinite(h_sd) || h_sd <= 0.0) throw ValidationError("h_sd must be finite and > 0");
}

bool hint(double eps, std::initializer_list<double> gains) {
    return eps * std::min(gains) > 10.0;
}

LinkGains triple(double h_sd, const RelayCandidate& c) { return LinkGains(c.h_sr, h_sd, c.h_rd); }

}  // namespace

double rate_energy_score(double h_sd, const RelayCandidate& cand, double k) {
    require_direct(h_sd);
    if (!alive(cand)) throw ValidationError("candidate gains must be finite and > 0");
    if (!std::isfinite(k) || k <= 0.0) throw ValidationError("k must be finite and > 0");
    return std::min(cand.h_sr, cand.h_rd * k / (k + 1.0)) / h_sd;
}

SelectionDecision select_relay_rate(double h_sd, const std::vector<RelayCandidate>& candidates,
                                    const OperatingPoint& op, bool exhaustive) {
    require_direct(h_sd);
    struct Ranked {
        const RelayCandidate* cand;
        double score;
    };
    std::vector<Ranked> ranked;
    for (const auto& c : candidates) {
        if (alive(c)) ranked.push_back({&c, rate_energy_score(h_sd, c, op.k())});
    }
    const double eps = op.epsilon();
    if (ranked.empty()) {
        return SelectionDecision{ProtocolKind::NCP, std::nullopt, 0.0, std::nullopt, hint(eps, {h_sd})};
    }
    std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.cand->id < b.cand->id;
    });

    const Ranked* best = &ranked.front();
    double best_gain = collaboration_gain(triple(h_sd, *best->cand), op).gain;
    if (exhaustive) {
        for (size_t i = 1; i < ranked.size(); ++i) {
            const double g = collaboration_gain(triple(h_sd, *ranked[i].cand), op).gain;
            if (g > best_gain) {
                best = &ranked[i];
                best_gain = g;
            }
        }
    }
    const RelayCandidate& c = *best->cand;
    const bool relay = best_gain > 1.0;
    return SelectionDecision{relay ? ProtocolKind::CP : ProtocolKind::NCP,
                             relay ? std::optional<std::string>(c.id) : std::nullopt, best->score,
                             best_gain, hint(eps, {h_sd, c.h_sr, c.h_rd})};
}

SelectionDecision select_relay_resource(double h_sd, const std::vector<RelayCandidate>& candidates,
                                        const OperatingPoint& op, double rate) {
    require_direct(h_sd);
    if (!std::isfinite(rate) || rate <= 0.0) throw ValidationError("rate must be finite and > 0");
    const double eps = op.epsilon();

    std::ostringstream violations;
    std::optional<SelectionDecision> best;
    auto consider = [&](SelectionDecision d) {
        if (!best || d.criterion_value < best->criterion_value) best = std::move(d);
    };

    std::vector<const RelayCandidate*> usable;
    for (const auto& c : candidates) {
        if (alive(c)) usable.push_back(&c);
    }
    std::sort(usable.begin(), usable.end(),
              [](const RelayCandidate* a, const RelayCandidate* b) { return a->id < b->id; });

    if (usable.empty()) {
        // Lone source: only its own direct slot is needed.
        const double bound = eps * h_sd;
        if (rate < bound) {
            const double usage = share_for_rate(h_sd * eps, rate);
            consider({ProtocolKind::NCP, std::nullopt, usage, std::nullopt, hint(eps, {h_sd})});
        } else {
            violations << " NCP: rate " << rate << " >= eps*h_sd = " << bound << ";";
        }
    }
    // NCP options are listed before CP so that equal totals prefer direct transmission.
    for (const RelayCandidate* c : usable) {
        const LinkGains g = triple(h_sd, *c);
        if (feasible(ProtocolKind::NCP, g, op, rate)) {
            const double usage = resource_usage(ProtocolKind::NCP, g, op, rate).total;
            consider({ProtocolKind::NCP, std::nullopt, usage, std::nullopt, hint(eps, {h_sd, c->h_rd})});
        } else {
            violations << " NCP with " << c->id << ": rate " << rate << " >= eps*min{h13, h23} = "
                       << feasibility_bound(ProtocolKind::NCP, g, op) << ";";
        }
    }
    for (const RelayCandidate* c : usable) {
        const LinkGains g = triple(h_sd, *c);
        if (feasible(ProtocolKind::CP, g, op, rate)) {
            const double usage = resource_usage(ProtocolKind::CP, g, op, rate).total;
            consider({ProtocolKind::CP, c->id, usage, std::nullopt, hint(eps, {c->h_sr, c->h_rd})});
        } else {
            violations << " CP via " << c->id << ": rate " << rate << " >= eps*min{h12, h23*k/(k+1)} = "
                       << feasibility_bound(ProtocolKind::CP, g, op) << ";";
        }
    }
    if (!best) {
        throw InfeasibleError("no feasible option:" + violations.str(), rate, 0.0);
    }
    return *best;
}

std::vector<FlowOutcome> evaluate_network(const std::vector<Flow>& flows, SelectionMode mode) {
    if (flows.empty()) throw ValidationError("evaluate_network requires at least one flow");
    std::vector<FlowOutcome> out;
    out.reserve(flows.size());
    for (const Flow& f : flows) {
        try {
            const OperatingPoint op(f.epsilon, f.k);
            if (mode == SelectionMode::Rate) {
                out.push_back({select_relay_rate(f.h_sd, f.candidates, op)});
            } else {
                if (!f.rate) throw ValidationError("flow " + f.source + "->" + f.destination + " has no rate");
                out.push_back({select_relay_resource(f.h_sd, f.candidates, op, *f.rate)});
            }
        } catch (const Error& e) {
            out.push_back({std::string(e.what())});
        }
    }
    return out;
}

}  // namespace collabgain
