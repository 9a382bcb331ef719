#include "collabgain/energy_resource.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "collabgain/error.hpp"
#include "collabgain/rate_alloc.hpp"
#include "collabgain/rootfind.hpp"

namespace collabgain {
namespace {

void require_rate(double rate) {
    if (!std::isfinite(rate) || rate <= 0.0) throw ValidationError("rate must be finite and > 0");
}

void require_k(double k) {
    if (!std::isfinite(k) || k <= 0.0) throw ValidationError("k must be finite and > 0");
}

// Base-rate slope of the chord bound: base_rate(eps) < eps * slope.
double chord_slope(ProtocolKind protocol, const LinkGains& g, double k) {
    if (protocol == ProtocolKind::NCP) return std::min(g.h13(), g.h23());
    return std::min(g.h12(), g.h23() * k / (k + 1.0));
}

void require_links(ProtocolKind protocol, const LinkGains& g) {
    if (protocol == ProtocolKind::NCP) {
        if (g.h13() == 0.0) throw DeadLinkError("h13");
    } else if (g.h12() == 0.0) {
        throw DeadLinkError("h12");
    }
    if (g.h23() == 0.0) throw DeadLinkError("h23");
}

}  // namespace

EnergySolution min_tern(ProtocolKind protocol, const LinkGains& gains, double k, double rate) {
    require_rate(rate);
    require_k(k);
    require_links(protocol, gains);

    auto base_at = [&](double eps) {
        return allocate(protocol, gains, OperatingPoint(eps, k)).base_rate;
    };

    // At eps_lo the chord bound keeps the base rate strictly below the demand.
    const double eps_lo = rate / chord_slope(protocol, gains, k);
    double eps_hi = eps_lo;
    for (int i = 0; base_at(eps_hi) < rate; ++i) {
        if (i > 600 || !std::isfinite(eps_hi * 4.0)) {
            throw SolverError("min_tern: no TERN reaches the demanded rate");
        }
        eps_hi *= 4.0;
    }

    // Bisect in log(eps) so the tolerance is relative.
    auto residual = [&](double t) { return base_at(std::exp(t)) - rate; };
    const double t_lo = std::log(eps_lo);
    const double t_hi = std::log(eps_hi);
    double eps;
    if (t_hi == t_lo) {
        eps = eps_hi;
    } else {
        const auto bracket = rootfind::make_bracket(residual, t_lo, t_hi);
        eps = std::exp(rootfind::solve_monotone(residual, bracket, 1e-15));
    }
    const Allocation at = allocate(protocol, gains, OperatingPoint(eps, k));
    if (std::fabs(at.base_rate - rate) > 1e-9 * rate) {
        throw SolverError("min_tern: inversion residual above tolerance");
    }
    return EnergySolution{protocol, eps, at.beta};
}

double energy_gain(const LinkGains& gains, double k, double rate) {
    const double ncp = min_tern(ProtocolKind::NCP, gains, k, rate).epsilon_min;
    const double cp = min_tern(ProtocolKind::CP, gains, k, rate).epsilon_min;
    return ncp / cp;
}

double feasibility_bound(ProtocolKind protocol, const LinkGains& gains, const OperatingPoint& op) {
    return op.epsilon() * chord_slope(protocol, gains, op.k());
}

bool feasible(ProtocolKind protocol, const LinkGains& gains, const OperatingPoint& op, double rate) {
    if (!std::isfinite(rate) || rate < 0.0) throw ValidationError("rate must be finite and >= 0");
    return rate < feasibility_bound(protocol, gains, op);
}

double share_for_rate(double c, double target) {
    if (!(c > 0.0) || !std::isfinite(c)) throw ValidationError("share_for_rate: c must be > 0");
    require_rate(target);
    if (!(target < c)) {
        throw InfeasibleError("share_for_rate: target not below supremum", target, c);
    }
    // beta = s / (1 - s) maps s in (0, 1) onto (0, inf).
    auto residual = [&](double s) { return detail::shannon(c, s / (1.0 - s)) - target; };
    constexpr double s_lo = 1e-200;
    constexpr double s_hi = 1.0 - 0x1p-53;
    const auto bracket = rootfind::make_bracket(residual, s_lo, s_hi);
    const double s = rootfind::solve_monotone(residual, bracket, 1e-18);
    const double beta = s / (1.0 - s);
    if (std::fabs(detail::shannon(c, beta) - target) > 1e-10 * (1.0 + target)) {
        throw SolverError("share_for_rate: residual above tolerance");
    }
    return beta;
}

ResourceUsage resource_usage(ProtocolKind protocol, const LinkGains& gains,
                             const OperatingPoint& op, double rate) {
    require_rate(rate);
    const double bound = feasibility_bound(protocol, gains, op);
    if (!(rate < bound)) {
        std::ostringstream msg;
        msg << "infeasible: rate " << rate << " >= " << to_string(protocol) << " bound eps*"
            << (protocol == ProtocolKind::NCP ? "min{h13, h23}" : "min{h12, h23*k/(k+1)}")
            << " = " << bound;
        throw InfeasibleError(msg.str(), rate, bound);
    }
    const double eps = op.epsilon();
    const double k = op.k();
    double beta1;
    double beta2;
    if (protocol == ProtocolKind::NCP) {
        beta1 = share_for_rate(gains.h13() * eps, rate);
        beta2 = share_for_rate(gains.h23() * k * eps, k * rate);
    } else {
        beta1 = share_for_rate(gains.h12() * eps, rate);
        beta2 = share_for_rate(gains.h23() * k * eps, (k + 1.0) * rate);
    }
    return ResourceUsage{protocol, beta1, beta2, beta1 + beta2};
}

}  // namespace collabgain
