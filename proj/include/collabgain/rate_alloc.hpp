#pragma once

#include "collabgain/model.hpp"

namespace collabgain {

/// Bisection bracket for the allocation share; the residuals extend
/// continuously to both ends of (0, 1).
inline constexpr double kBetaFloor = 1e-15;
inline constexpr double kBetaCeil = 1.0 - 1e-15;

/// k * R1(beta) - R2(1 - beta) for direct transmission. Strictly increasing in beta.
double ncp_residual(const LinkGains& gains, const OperatingPoint& op, double beta);

/// (k + 1) * R1(beta) - (1 - beta) ln(1 + h23 k eps / (1 - beta)) for the relayed
/// protocol. Strictly increasing in beta.
double cp_residual(const LinkGains& gains, const OperatingPoint& op, double beta);

/// Fair optimal allocation with both users transmitting straight to the
/// destination. Requires h13 > 0 and h23 > 0.
Allocation ncp_allocate(const LinkGains& gains, const OperatingPoint& op);

/// Fair optimal allocation when user 2 decodes, re-encodes and forwards user
/// 1's message with its own. Requires h12 > 0 and h23 > 0; h13 is unused.
Allocation cp_allocate(const LinkGains& gains, const OperatingPoint& op);

Allocation allocate(ProtocolKind protocol, const LinkGains& gains, const OperatingPoint& op);

GainReport collaboration_gain(const LinkGains& gains, const OperatingPoint& op);

}  // namespace collabgain
