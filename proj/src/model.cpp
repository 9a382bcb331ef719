#include "collabgain/model.hpp"

#include <cmath>
#include <string>

#include "collabgain/error.hpp"

namespace collabgain {

std::string_view to_string(ProtocolKind protocol) noexcept {
    return protocol == ProtocolKind::NCP ? "NCP" : "CP";
}

namespace {

void require_gain(double h, const char* name) {
    if (!std::isfinite(h) || h < 0.0) {
        throw ValidationError(std::string("gain ") + name + " must be finite and >= 0");
    }
}

}  // namespace

LinkGains::LinkGains(double h12, double h13, double h23) : h12_(h12), h13_(h13), h23_(h23) {
    require_gain(h12, "h12");
    require_gain(h13, "h13");
    require_gain(h23, "h23");
}

OperatingPoint::OperatingPoint(double epsilon, double k) : epsilon_(epsilon), k_(k) {
    if (!std::isfinite(epsilon) || epsilon <= 0.0) {
        throw ValidationError("epsilon must be finite and > 0");
    }
    if (!std::isfinite(k) || k <= 0.0) {
        throw ValidationError("k must be finite and > 0");
    }
}

double rate_curve(double h, double eps, double beta) {
    if (!std::isfinite(h) || h < 0.0) throw ValidationError("h must be finite and >= 0");
    if (!std::isfinite(eps) || eps <= 0.0) throw ValidationError("eps must be finite and > 0");
    if (!std::isfinite(beta) || beta <= 0.0 || beta > 1.0) {
        throw ValidationError("beta must lie in (0, 1]");
    }
    return detail::shannon(h * eps, beta);
}

}  // namespace collabgain
