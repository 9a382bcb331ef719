#include "collabgain/geometry.hpp"

#include <cmath>

#include "collabgain/error.hpp"

namespace collabgain {
namespace {

void require_eta(double eta) {
    if (!std::isfinite(eta) || eta <= 0.0) throw ValidationError("eta must be finite and > 0");
}

void require_k(double k) {
    if (!std::isfinite(k) || k <= 0.0) throw ValidationError("k must be finite and > 0");
}

double path_gain(double distance, double eta, const char* link) {
    if (!(distance > 0.0)) throw GeometryError(std::string("coincident nodes on link ") + link);
    const double h = std::pow(distance, -eta);
    if (!(h <= kMaxGeometricGain)) {
        throw GeometryError(std::string("gain on link ") + link + " exceeds overflow guard");
    }
    return h;
}

double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

LinkGains gains_from_placement(const Placement& p) {
    require_eta(p.eta);
    for (const Point2& q : {p.source, p.destination, p.relay}) {
        if (!std::isfinite(q.x) || !std::isfinite(q.y)) {
            throw ValidationError("placement coordinates must be finite");
        }
    }
    if (p.source == p.destination) throw GeometryError("source and destination coincide");
    return LinkGains(path_gain(distance(p.source, p.relay), p.eta, "h12"),
                     path_gain(distance(p.source, p.destination), p.eta, "h13"),
                     path_gain(distance(p.relay, p.destination), p.eta, "h23"));
}

LinkGains collinear_gains(double d, double eta) {
    require_eta(eta);
    if (!(d > 0.0 && d < 1.0)) throw ValidationError("relay position d must lie in (0, 1)");
    return LinkGains(path_gain(d, eta, "h12"), 1.0, path_gain(1.0 - d, eta, "h23"));
}

double optimal_relay_location(double k, double eta) {
    require_k(k);
    require_eta(eta);
    return 1.0 / (1.0 + std::pow(k / (k + 1.0), 1.0 / eta));
}

double max_geometric_gain(double k, double eta) {
    require_k(k);
    require_eta(eta);
    return std::pow(1.0 + std::pow(k / (k + 1.0), 1.0 / eta), eta);
}

}  // namespace collabgain
