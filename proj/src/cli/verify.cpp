#include "collabgain/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "collabgain/bounds.hpp"
#include "collabgain/energy_resource.hpp"
#include "collabgain/error.hpp"
#include "collabgain/geometry.hpp"
#include "collabgain/rate_alloc.hpp"
#include "collabgain/relay_select.hpp"

namespace collabgain::cli {
namespace {

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::exp(std::uniform_real_distribution<double>(std::log(lo), std::log(hi))(rng));
}

template <typename... Args>
std::string fmt(const Args&... args) {
    std::ostringstream os;
    os.precision(6);
    (os << ... << args);
    return os.str();
}

std::vector<CheckResult> sandwich() {
    const double hs[] = {0.1, 0.5, 1.0, 2.0, 10.0};
    const double es[] = {1e-4, 1e-2, 1.0, 1e2, 1e4};
    const double ks[] = {0.1, 1.0, 10.0};
    long points = 0;
    long violations[4] = {0, 0, 0, 0};
    for (double h12 : hs)
        for (double h13 : hs)
            for (double h23 : hs)
                for (double e : es)
                    for (double k : ks) {
                        const LinkGains g(h12, h13, h23);
                        const OperatingPoint op(e, k);
                        const double rn = ncp_allocate(g, op).base_rate;
                        const double rc = cp_allocate(g, op).base_rate;
                        const BoundPair b[4] = {ncp_bounds_high_tern(g, op), cp_bounds_high_tern(g, op),
                                                ncp_bounds_low_tern(g, op), cp_bounds_low_tern(g, op)};
                        const double exact[4] = {rn, rc, rn, rc};
                        for (int i = 0; i < 4; ++i) {
                            if (!(b[i].lower <= exact[i] + 1e-9 && exact[i] <= b[i].upper + 1e-9)) ++violations[i];
                        }
                        ++points;
                    }
    const char* names[4] = {"ncp_high_tern", "cp_high_tern", "ncp_low_tern", "cp_low_tern"};
    std::vector<CheckResult> out;
    for (int i = 0; i < 4; ++i) {
        out.push_back({"sandwich", names[i], violations[i] == 0, false,
                       fmt(points, " points, ", violations[i], " violations")});
    }
    return out;
}

std::vector<CheckResult> duality() {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> gain(0.1, 10.0);
    double worst = 0.0;
    int failures = 0;
    for (int i = 0; i < 100; ++i) {
        const LinkGains g(gain(rng), gain(rng), gain(rng));
        const double eps = log_uniform(rng, 1e-3, 1e2);
        const double k = log_uniform(rng, 0.1, 10.0);
        for (ProtocolKind p : {ProtocolKind::NCP, ProtocolKind::CP}) {
            const double rate = allocate(p, g, OperatingPoint(eps, k)).base_rate;
            const double back = min_tern(p, g, k, rate).epsilon_min;
            worst = std::max(worst, rel(back, eps));
            if (rel(back, eps) > 1e-6) ++failures;
        }
    }
    return {{"duality", "min_tern inverts the allocators", failures == 0, false,
             fmt("200 roundtrips, worst relative error ", worst)}};
}

std::vector<CheckResult> limits() {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> gain(0.1, 10.0);
    double worst_low = 0.0;
    double worst_high = 0.0;
    for (int i = 0; i < 20; ++i) {
        const LinkGains g(gain(rng), gain(rng), gain(rng));
        for (double k : {0.1, 1.0, 10.0}) {
            worst_low = std::max(worst_low, rel(collaboration_gain(g, OperatingPoint(1e-6, k)).gain,
                                                low_tern_gain_limit(g, k)));
            worst_high = std::max(worst_high, rel(collaboration_gain(g, OperatingPoint(1e8, k)).gain,
                                                  high_tern_gain_limit(k)));
        }
    }
    out.push_back({"limits", "low-TERN gain limit (eps=1e-6, 1e-3 rel)", worst_low <= 1e-3, false,
                   fmt("worst relative error ", worst_low)});
    out.push_back({"limits", "high-TERN gain limit (eps=1e8, 1e-2 rel)", worst_high <= 1e-2, false,
                   fmt("worst relative error ", worst_high)});

    const LinkGains ones(1.0, 1.0, 1.0);
    const double slope = collaboration_gain(ones, OperatingPoint(1.0, 1e-4)).gain / 1e-4;
    const double want = small_k_gain_slope(ones, 1.0);
    out.push_back({"limits", "small-k slope (k=1e-4, 1% rel)", rel(slope, want) <= 1e-2, false,
                   fmt("gain/k = ", slope, ", limit ", want)});
    const double small = collaboration_gain(ones, OperatingPoint(1.0, 1e-3)).gain;
    out.push_back({"limits", "NCP strictly better at k=1e-3", small < 1.0, false, fmt("gain ", small)});
    const double large = collaboration_gain(ones, OperatingPoint(1.0, 1e4)).gain;
    out.push_back({"limits", "large-k gain -> 1 (k=1e4, 0.01 abs)", std::fabs(large - 1.0) <= 0.01, false,
                   fmt("gain ", large)});
    return out;
}

std::vector<CheckResult> placement() {
    std::vector<CheckResult> out;
    for (double k : {1.0, 10.0}) {
        for (double eta : {2.0, 3.0}) {
            double best_d = 0.0;
            double best = -1.0;
            for (int i = 1; i < 1000; ++i) {
                const double d = i * 1e-3;
                const double v = low_tern_gain_limit(collinear_gains(d, eta), k);
                if (v > best) {
                    best = v;
                    best_d = d;
                }
            }
            const double d_star = optimal_relay_location(k, eta);
            const double peak = max_geometric_gain(k, eta);
            const bool ok = std::fabs(best_d - d_star) <= 2e-3 && rel(best, peak) <= 1e-3;
            out.push_back({"placement", fmt("grid argmax k=", k, " eta=", eta), ok, false,
                           fmt("argmax ", best_d, " vs ", d_star, ", max ", best, " vs ", peak,
                               " (rel ", rel(best, peak), ")")});
        }
    }
    return out;
}

std::vector<CheckResult> selection() {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> gain(0.1, 10.0);
    const OperatingPoint low(1e-4, 1.0);
    std::uniform_real_distribution<double> direct(0.1, 1.0);
    int compared = 0;
    int mismatches = 0;
    int relayed = 0;
    while (compared < 50) {
        std::vector<RelayCandidate> cands;
        for (int j = 0; j < 5; ++j) cands.push_back({"c" + std::to_string(j), gain(rng), gain(rng)});
        const double h_sd = direct(rng);
        std::vector<double> scores;
        for (const auto& c : cands) scores.push_back(rate_energy_score(h_sd, c, low.k()));
        std::sort(scores.rbegin(), scores.rend());
        if (scores[0] < 1.01 * scores[1]) continue;
        ++compared;
        const auto by_score = select_relay_rate(h_sd, cands, low, false);
        const auto by_exact = select_relay_rate(h_sd, cands, low, true);
        if (by_score.protocol != by_exact.protocol || by_score.relay_id != by_exact.relay_id) ++mismatches;
        if (by_score.relay_id) ++relayed;
    }
    int bad_cp = 0;
    for (int i = 0; i < 1000; ++i) {
        std::vector<RelayCandidate> cands;
        for (int j = 0; j < 3; ++j) cands.push_back({"r" + std::to_string(j), gain(rng), gain(rng)});
        const OperatingPoint op(log_uniform(rng, 1e-4, 1e4), log_uniform(rng, 0.1, 10.0));
        const auto d = select_relay_rate(gain(rng), cands, op);
        if (d.protocol == ProtocolKind::CP && !(d.exact_gain && *d.exact_gain > 1.0)) ++bad_cp;
    }
    return {{"selection", "score choice matches exact argmax (eps=1e-4)", mismatches == 0, false,
             fmt(compared, " sets (", relayed, " relayed), ", mismatches, " mismatches")},
            {"selection", "CP only with exact gain > 1", bad_cp == 0, false, fmt("1000 instances, ", bad_cp, " bad")}};
}

// Grid minimizer of |residual| with step 1e-6.
double grid_beta(const auto& residual) {
    double best = 0.0;
    double best_abs = INFINITY;
    for (int i = 1; i < 1000000; ++i) {
        const double b = i * 1e-6;
        const double a = std::fabs(residual(b));
        if (a < best_abs) {
            best_abs = a;
            best = b;
        }
    }
    return best;
}

std::vector<CheckResult> oracle() {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> gain(0.1, 10.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const LinkGains g(gain(rng), gain(rng), gain(rng));
        const OperatingPoint op(log_uniform(rng, 1e-3, 1e2), log_uniform(rng, 0.1, 10.0));
        worst = std::max(worst, std::fabs(ncp_allocate(g, op).beta -
                                          grid_beta([&](double b) { return ncp_residual(g, op, b); })));
        worst = std::max(worst, std::fabs(cp_allocate(g, op).beta -
                                          grid_beta([&](double b) { return cp_residual(g, op, b); })));
    }
    return {{"oracle", "allocators match 1e-6 beta grid", worst <= 1e-5, false, fmt("worst |dbeta| ", worst)}};
}

std::vector<CheckResult> inequality() {
    const double hs[] = {0.1, 0.5, 1.0, 2.0, 10.0};
    const double es[] = {1e-4, 1e-2, 1.0, 1e2, 1e4};
    const double ks[] = {0.1, 1.0, 10.0};
    int total = 0;
    int holds = 0;
    for (double h12 : hs)
        for (double h13 : hs)
            for (double h23 : hs)
                for (double e : es)
                    for (double k : ks) {
                        const LinkGains g(h12, h13, h23);
                        ++total;
                        if (collaboration_gain(g, OperatingPoint(e, k)).gain <= low_tern_gain_limit(g, k)) ++holds;
                    }
    return {{"inequality", "gain <= low-TERN limit (survey)", true, true,
             fmt(holds, " of ", total, " grid points satisfy it")}};
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
    static const std::vector<std::string_view> names = {"sandwich",  "duality", "limits",    "placement",
                                                        "selection", "oracle",  "inequality"};
    return names;
}

std::vector<CheckResult> run_suite(std::string_view suite) {
    if (suite == "sandwich") return sandwich();
    if (suite == "duality") return duality();
    if (suite == "limits") return limits();
    if (suite == "placement") return placement();
    if (suite == "selection") return selection();
    if (suite == "oracle") return oracle();
    if (suite == "inequality") return inequality();
    if (suite == "all") {
        std::vector<CheckResult> out;
        for (std::string_view name : suite_names()) {
            auto part = run_suite(name);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw ValidationError("unknown suite \"" + std::string(suite) + "\"");
}

}  // namespace collabgain::cli
