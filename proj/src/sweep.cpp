#include "collabgain/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <functional>
#include <ostream>
#include <thread>

#include "collabgain/bounds.hpp"
#include "collabgain/energy_resource.hpp"
#include "collabgain/error.hpp"
#include "collabgain/geometry.hpp"
#include "collabgain/rate_alloc.hpp"

namespace collabgain {

std::string_view to_string(SweepKind kind) noexcept {
    switch (kind) {
        case SweepKind::PlaneGain: return "plane_gain";
        case SweepKind::CollinearGain: return "collinear_gain";
        case SweepKind::RateRatio: return "rate_ratio";
        case SweepKind::ResourceRatio: return "resource_ratio";
        case SweepKind::EnergyRatio: return "energy_ratio";
    }
    return "unknown";
}

std::optional<SweepKind> parse_sweep_kind(std::string_view name) noexcept {
    for (SweepKind kind : {SweepKind::PlaneGain, SweepKind::CollinearGain, SweepKind::RateRatio,
                           SweepKind::ResourceRatio, SweepKind::EnergyRatio}) {
        if (to_string(kind) == name) return kind;
    }
    return std::nullopt;
}

std::vector<double> GridAxis::points() const {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step) || !(step > 0.0)) {
        throw ValidationError("grid bounds must be finite and step > 0");
    }
    if (!(hi >= lo) || step > hi - lo) throw ValidationError("empty grid: step exceeds range");
    const double span = (hi - lo) / step;
    const auto intervals = static_cast<long>(std::floor(span + 1e-9));
    if (intervals > 50'000'000) throw ValidationError("grid too large");
    std::vector<double> out;
    out.reserve(static_cast<size_t>(intervals) + 1);
    // When the step divides the range, interpolate between the endpoints so that
    // mirror-image grids (lo = -hi) are exactly symmetric.
    const bool exact = std::fabs(span - static_cast<double>(intervals)) <= 1e-9 * std::max(1.0, span);
    for (long i = 0; i <= intervals; ++i) {
        double v;
        if (exact) {
            const auto n = static_cast<double>(intervals);
            v = (lo * (n - static_cast<double>(i)) + hi * static_cast<double>(i)) / n;
        } else {
            v = lo + static_cast<double>(i) * step;
        }
        out.push_back(logarithmic ? std::pow(10.0, v) : v);
    }
    return out;
}

GridAxis GridAxis::with_count(double lo, double hi, int count, bool logarithmic) {
    if (count < 2) throw ValidationError("grid needs at least two points");
    return GridAxis{lo, hi, (hi - lo) / (count - 1), logarithmic};
}

namespace {

struct Layout {
    std::vector<std::string> coordinates;
    std::vector<std::string> extra;
};

Layout layout_for(SweepKind kind) {
    switch (kind) {
        case SweepKind::PlaneGain: return {{"x", "y"}, {"beta_ncp", "beta_cp"}};
        case SweepKind::CollinearGain: return {{"d"}, {"beta_ncp", "beta_cp", "low_tern_limit"}};
        case SweepKind::RateRatio: return {{"k"}, {"beta_ncp", "beta_cp"}};
        case SweepKind::ResourceRatio:
            return {{"d"}, {"total_ncp", "total_cp", "feasible_ncp", "feasible_cp"}};
        case SweepKind::EnergyRatio: return {{"d"}, {"eps_ncp", "eps_cp"}};
    }
    return {};
}

SweepRecord gain_record(std::vector<double> coords, const LinkGains& gains, const OperatingPoint& op) {
    const GainReport r = collaboration_gain(gains, op);
    return SweepRecord{std::move(coords), r.gain, {r.ncp.beta, r.cp.beta}, true};
}

SweepRecord degenerate_record(std::vector<double> coords, size_t extras) {
    return SweepRecord{std::move(coords), std::nullopt, std::vector<std::optional<double>>(extras), false};
}

double require_rate(const SweepConfig& c) {
    if (!c.rate || !std::isfinite(*c.rate) || *c.rate <= 0.0) {
        throw ValidationError(std::string(to_string(c.kind)) + " sweep requires a rate > 0");
    }
    return *c.rate;
}

void run_parallel(size_t count, unsigned threads, const std::function<void(size_t)>& body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<size_t>(threads, std::max<size_t>(count, 1)));
    if (threads <= 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&, t] {
                try {
                    for (size_t i = t; i < count; i += threads) body(i);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace

SweepResult sweep(const SweepConfig& c) {
    const OperatingPoint op(c.epsilon, c.k);
    if (!std::isfinite(c.eta) || c.eta <= 0.0) throw ValidationError("eta must be finite and > 0");
    Layout layout = layout_for(c.kind);
    const size_t extras = layout.extra.size();

    std::vector<std::vector<double>> coords;
    if (c.kind == SweepKind::PlaneGain) {
        const auto xs = c.x.points();
        const auto ys = c.y.points();
        coords.reserve(xs.size() * ys.size());
        for (double x : xs) {
            for (double y : ys) coords.push_back({x, y});
        }
    } else if (c.kind == SweepKind::RateRatio) {
        if (!(c.d_fixed > 0.0 && c.d_fixed < 1.0)) throw ValidationError("d must lie in (0, 1)");
        for (double k : c.k_axis.points()) coords.push_back({k});
    } else {
        for (double d : c.d.points()) coords.push_back({d});
    }
    std::optional<double> rate;
    if (c.kind == SweepKind::ResourceRatio || c.kind == SweepKind::EnergyRatio) rate = require_rate(c);

    std::vector<SweepRecord> records(coords.size());
    auto evaluate = [&](size_t i) {
        std::vector<double> at = coords[i];
        try {
            switch (c.kind) {
                case SweepKind::PlaneGain: {
                    const Placement p{{-0.5, 0.0}, {0.5, 0.0}, {at[0], at[1]}, c.eta};
                    records[i] = gain_record(std::move(at), gains_from_placement(p), op);
                    break;
                }
                case SweepKind::CollinearGain: {
                    const LinkGains g = collinear_gains(at[0], c.eta);
                    SweepRecord r = gain_record(std::move(at), g, op);
                    r.extra.push_back(low_tern_gain_limit(g, c.k));
                    records[i] = std::move(r);
                    break;
                }
                case SweepKind::RateRatio: {
                    const LinkGains g = collinear_gains(c.d_fixed, c.eta);
                    records[i] = gain_record(std::move(at), g, OperatingPoint(c.epsilon, coords[i][0]));
                    break;
                }
                case SweepKind::ResourceRatio: {
                    const LinkGains g = collinear_gains(at[0], c.eta);
                    const bool ok_ncp = feasible(ProtocolKind::NCP, g, op, *rate);
                    const bool ok_cp = feasible(ProtocolKind::CP, g, op, *rate);
                    SweepRecord r{std::move(at), std::nullopt, std::vector<std::optional<double>>(extras),
                                  ok_ncp && ok_cp};
                    if (ok_ncp) r.extra[0] = resource_usage(ProtocolKind::NCP, g, op, *rate).total;
                    if (ok_cp) r.extra[1] = resource_usage(ProtocolKind::CP, g, op, *rate).total;
                    r.extra[2] = ok_ncp ? 1.0 : 0.0;
                    r.extra[3] = ok_cp ? 1.0 : 0.0;
                    if (r.feasible) r.gain = *r.extra[0] / *r.extra[1];
                    records[i] = std::move(r);
                    break;
                }
                case SweepKind::EnergyRatio: {
                    const LinkGains g = collinear_gains(at[0], c.eta);
                    const double e_ncp = min_tern(ProtocolKind::NCP, g, c.k, *rate).epsilon_min;
                    const double e_cp = min_tern(ProtocolKind::CP, g, c.k, *rate).epsilon_min;
                    records[i] = SweepRecord{std::move(at), e_ncp / e_cp, {e_ncp, e_cp}, true};
                    break;
                }
            }
        } catch (const GeometryError&) {
            records[i] = degenerate_record(coords[i], extras);
        }
    };
    run_parallel(coords.size(), c.threads, evaluate);

    return SweepResult{c.kind, std::move(layout.coordinates), std::move(layout.extra), std::move(records)};
}

std::string format_number(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const SweepResult& result) {
    std::string line;
    for (const auto& name : result.coordinate_names) line += name + ",";
    line += "gain";
    for (const auto& name : result.extra_names) line += "," + name;
    line += ",feasible\n";
    out << line;
    for (const SweepRecord& r : result.records) {
        line.clear();
        for (double v : r.coordinates) line += format_number(v) + ",";
        if (r.gain) line += format_number(*r.gain);
        for (const auto& v : r.extra) {
            line += ",";
            if (v) line += format_number(*v);
        }
        line += r.feasible ? ",1\n" : ",0\n";
        out << line;
    }
}

}  // namespace collabgain
