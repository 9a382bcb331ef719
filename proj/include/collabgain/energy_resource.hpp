#pragma once

#include "collabgain/model.hpp"

namespace collabgain {

struct EnergySolution {
    ProtocolKind protocol;
    double epsilon_min;  ///< smallest user-1 TERN reaching the demanded base rate
    double beta;         ///< allocation at epsilon_min
};

/// Resource consumed when each user keeps its own TERN budget and the shared
/// resource is allowed to exceed one unit.
struct ResourceUsage {
    ProtocolKind protocol;
    double beta1;
    double beta2;
    double total;
};

/// Inverts the protocol's optimal base rate in epsilon: the least TERN at
/// which user 1 reaches `rate` (user 2 then gets k * rate).
EnergySolution min_tern(ProtocolKind protocol, const LinkGains& gains, double k, double rate);

/// min_tern(NCP) / min_tern(CP).
double energy_gain(const LinkGains& gains, double k, double rate);

/// Supremum of the servable base rate: eps * min{h13, h23} for NCP and
/// eps * min{h12, h23 k / (k + 1)} for CP.
double feasibility_bound(ProtocolKind protocol, const LinkGains& gains, const OperatingPoint& op);

/// rate < feasibility_bound(...).
bool feasible(ProtocolKind protocol, const LinkGains& gains, const OperatingPoint& op, double rate);

/// Least share beta > 0 with beta ln(1 + c / beta) = target; requires target < c.
double share_for_rate(double c, double target);

/// Throws InfeasibleError when the rate is not strictly below the bound.
ResourceUsage resource_usage(ProtocolKind protocol, const LinkGains& gains,
                             const OperatingPoint& op, double rate);

}  // namespace collabgain
