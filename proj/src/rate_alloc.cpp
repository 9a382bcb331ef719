#include "collabgain/rate_alloc.hpp"

#include <cmath>

#include "collabgain/error.hpp"
#include "collabgain/rootfind.hpp"

namespace collabgain {
namespace {

// Bisection runs down to floating-point resolution of beta.
constexpr double kBetaTol = 1e-18;

void require_alive(double h, const char* name) {
    if (h == 0.0) throw DeadLinkError(name);
}

Allocation finish(ProtocolKind protocol, double beta, double base_rate, double k) {
    return Allocation{protocol, beta, base_rate, k * base_rate, (k + 1.0) * base_rate};
}

template <typename Residual>
double solve_share(Residual&& residual) {
    const auto bracket = rootfind::make_bracket(residual, kBetaFloor, kBetaCeil);
    return rootfind::solve_monotone(residual, bracket, kBetaTol);
}

}  // namespace

double ncp_residual(const LinkGains& gains, const OperatingPoint& op, double beta) {
    const double k = op.k();
    return k * detail::shannon(gains.h13() * op.epsilon(), beta) -
           detail::shannon(gains.h23() * op.epsilon2(), 1.0 - beta);
}

double cp_residual(const LinkGains& gains, const OperatingPoint& op, double beta) {
    const double k = op.k();
    return (k + 1.0) * detail::shannon(gains.h12() * op.epsilon(), beta) -
           detail::shannon(gains.h23() * op.epsilon2(), 1.0 - beta);
}

Allocation ncp_allocate(const LinkGains& gains, const OperatingPoint& op) {
    require_alive(gains.h13(), "h13");
    require_alive(gains.h23(), "h23");
    const double beta = solve_share([&](double b) { return ncp_residual(gains, op, b); });
    const double base = detail::shannon(gains.h13() * op.epsilon(), beta);
    return finish(ProtocolKind::NCP, beta, base, op.k());
}

Allocation cp_allocate(const LinkGains& gains, const OperatingPoint& op) {
    require_alive(gains.h12(), "h12");
    require_alive(gains.h23(), "h23");
    const double beta = solve_share([&](double b) { return cp_residual(gains, op, b); });
    const double base = detail::shannon(gains.h12() * op.epsilon(), beta);
    return finish(ProtocolKind::CP, beta, base, op.k());
}

Allocation allocate(ProtocolKind protocol, const LinkGains& gains, const OperatingPoint& op) {
    return protocol == ProtocolKind::NCP ? ncp_allocate(gains, op) : cp_allocate(gains, op);
}

GainReport collaboration_gain(const LinkGains& gains, const OperatingPoint& op) {
    const Allocation ncp = ncp_allocate(gains, op);
    const Allocation cp = cp_allocate(gains, op);
    const double gain = cp.base_rate / ncp.base_rate;
    return GainReport{gain, ncp, cp, gain > 1.0};
}

}  // namespace collabgain
