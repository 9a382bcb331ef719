#pragma once

#include <optional>

#include "collabgain/model.hpp"

namespace collabgain {

/// Closed-form bracket on user 1's base rate R1 (nats). The sum rate is
/// (k + 1) * R1 for either protocol, so gain ratios are unaffected.
struct BoundPair {
    double lower;
    double upper;
    std::optional<double> beta_at_bound;
    /// True when the construction's usual formula degenerated and a limiting
    /// form was substituted (equal Taylor slopes, or an underflowed tangent).
    bool degenerate = false;
};

/// Tangents at the high-TERN share 1/(k+1) (upper) and end-point chords (lower).
BoundPair ncp_bounds_high_tern(const LinkGains& gains, const OperatingPoint& op);

/// Tangents at the high-TERN share 1/(k+2) (upper) and end-point chords (lower).
BoundPair cp_bounds_high_tern(const LinkGains& gains, const OperatingPoint& op);

/// Second-order Taylor curves in eps (lower) and end-point values (upper).
BoundPair ncp_bounds_low_tern(const LinkGains& gains, const OperatingPoint& op);
BoundPair cp_bounds_low_tern(const LinkGains& gains, const OperatingPoint& op);

/// Where the two tangent lines of the high-TERN construction meet.
struct TangentIntersection {
    double beta;
    double value;
};

/// Second, independent route to the high-TERN upper bounds: intersect the
/// tangent lines explicitly instead of using the closed form.
TangentIntersection ncp_tangent_intersection(const LinkGains& gains, const OperatingPoint& op);
TangentIntersection cp_tangent_intersection(const LinkGains& gains, const OperatingPoint& op);

/// Gain limit as eps -> 0: min{h12, k h23 / (k + 1)} / min{h13, h23}.
double low_tern_gain_limit(const LinkGains& gains, double k);

/// Gain limit as eps -> inf: (k + 1) / (k + 2).
double high_tern_gain_limit(double k);

/// lim_{k -> 0} gain / k = h23 eps / ln(1 + h13 eps).
double small_k_gain_slope(const LinkGains& gains, double eps);

namespace detail {

/// x / (1 + x) - ln(1 + x): the negated slope of beta ln(1 + c / beta) at the
/// share where c / beta = x. Accurate for small x.
double tangent_defect(double x);

}  // namespace detail
}  // namespace collabgain
