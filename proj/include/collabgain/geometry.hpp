#pragma once

#include "collabgain/model.hpp"

namespace collabgain {

struct Point2 {
    double x;
    double y;

    bool operator==(const Point2&) const = default;
};

/// Node positions on the plane and the path-loss exponent eta; h_ij = d_ij^-eta.
struct Placement {
    Point2 source;
    Point2 destination;
    Point2 relay;
    double eta;
};

/// Gains above this are treated as a relay sitting on an endpoint.
inline constexpr double kMaxGeometricGain = 1e12;

/// Throws GeometryError for coincident nodes or gains above kMaxGeometricGain.
LinkGains gains_from_placement(const Placement& placement);

/// Relay on the unit source-destination segment at distance d from the
/// source: h12 = d^-eta, h13 = 1, h23 = (1 - d)^-eta.
LinkGains collinear_gains(double d, double eta);

/// d* = 1 / (1 + (k / (k + 1))^(1/eta)).
double optimal_relay_location(double k, double eta);

/// (1 + (k / (k + 1))^(1/eta))^eta, the low-TERN gain at d*.
double max_geometric_gain(double k, double eta);

}  // namespace collabgain
