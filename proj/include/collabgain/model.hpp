#pragma once

#include <cmath>
#include <string_view>

namespace collabgain {

enum class ProtocolKind { NCP, CP };

std::string_view to_string(ProtocolKind protocol) noexcept;

/// Channel energy gains of a source (1), relay (2), destination (3) triple.
///
/// All gains are finite and nonnegative. A gain of exactly zero is a dead
/// link; it is representable here and rejected by the solvers that need it.
class LinkGains {
public:
    LinkGains(double h12, double h13, double h23);

    double h12() const noexcept { return h12_; }
    double h13() const noexcept { return h13_; }
    double h23() const noexcept { return h23_; }

    bool operator==(const LinkGains&) const = default;

private:
    double h12_;
    double h13_;
    double h23_;
};

/// TERN of user 1 and the rate ratio k = R2/R1. User 2's TERN is k * epsilon.
class OperatingPoint {
public:
    OperatingPoint(double epsilon, double k);

    double epsilon() const noexcept { return epsilon_; }
    double k() const noexcept { return k_; }
    double epsilon2() const noexcept { return k_ * epsilon_; }

    bool operator==(const OperatingPoint&) const = default;

private:
    double epsilon_;
    double k_;
};

/// Optimal resource split for one protocol. Rates are in nats.
struct Allocation {
    ProtocolKind protocol;
    double beta;       ///< user 1's resource share, in (0, 1)
    double base_rate;  ///< R1
    double rate2;      ///< R2 = k * R1
    double sum_rate;   ///< (k + 1) * R1
};

struct GainReport {
    double gain;  ///< cp.base_rate / ncp.base_rate
    Allocation ncp;
    Allocation cp;
    bool collaborate;  ///< gain > 1
};

/// beta * ln(1 + h * eps / beta), the rate of a user owning share beta of the
/// unit resource. Zero for a dead link.
double rate_curve(double h, double eps, double beta);

namespace detail {

// rate_curve without domain checks, for any beta > 0, with c = h * eps.
inline double shannon(double c, double beta) {
    return c == 0.0 ? 0.0 : beta * std::log1p(c / beta);
}

}  // namespace detail
}  // namespace collabgain
