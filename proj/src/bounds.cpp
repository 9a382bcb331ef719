#include "collabgain/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "collabgain/error.hpp"

namespace collabgain {

double detail::tangent_defect(double x) {
    if (x >= 0.1) return x / (1.0 + x) - std::log1p(x);
    // sum_{n >= 2} (-1)^(n+1) (1 - 1/n) x^n
    double term = x;
    double sum = 0.0;
    for (int n = 2; n < 40; ++n) {
        term *= -x;
        const double add = term * (1.0 - 1.0 / n);
        sum += add;
        if (std::fabs(add) <= 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

namespace {

void require_alive(double h, const char* name) {
    if (h == 0.0) throw DeadLinkError(name);
}

// Tangent construction around the high-TERN share beta0. Curve 1 is
// increasing in beta with value L1 * beta0 and slope -D1; curve 2 is
// decreasing with value L2 * beta0 and slope D2 / w2. Returns the closed-form
// intersection value L1 D2 + w2 D1 L2 over (1/beta0)(D2 + w2 D1), written as
// a ratio of the per-tangent terms.
struct Tangents {
    double beta0;
    double log1;  // ln(1 + x1)
    double d1;    // tangent_defect(x1)
    double log2;
    double d2;
    double w2;    // 1/w2 scales curve 2's slope
};

bool degenerate(const Tangents& t) {
    return t.d1 == 0.0 || t.d2 == 0.0 || !std::isfinite(t.log1 / t.d1) ||
           !std::isfinite(t.log2 / t.d2);
}

// [L1/D1 + w2 L2/D2] / [(1/beta0)/D1 + w2 (1/beta0)/D2]
double closed_form_upper(const Tangents& t) {
    const double inv_b0 = 1.0 / t.beta0;
    const double num = t.log1 / t.d1 + t.w2 * t.log2 / t.d2;
    const double den = inv_b0 / t.d1 + t.w2 * inv_b0 / t.d2;
    return num / den;
}

TangentIntersection intersect(const Tangents& t) {
    const double a0 = t.log1 * t.beta0;
    const double slope_a = -t.d1;
    const double b0 = t.log2 * t.beta0;
    const double slope_b = t.d2 / t.w2;
    const double shift = (b0 - a0) / (slope_a - slope_b);
    return TangentIntersection{t.beta0 + shift, a0 + slope_a * shift};
}

Tangents ncp_tangents(const LinkGains& g, const OperatingPoint& op) {
    require_alive(g.h13(), "h13");
    require_alive(g.h23(), "h23");
    const double k = op.k();
    const double x1 = g.h13() * (k + 1.0) * op.epsilon();
    const double x2 = g.h23() * (k + 1.0) * op.epsilon();
    return Tangents{1.0 / (k + 1.0), std::log1p(x1), detail::tangent_defect(x1),
                    std::log1p(x2), detail::tangent_defect(x2), k};
}

Tangents cp_tangents(const LinkGains& g, const OperatingPoint& op) {
    require_alive(g.h12(), "h12");
    require_alive(g.h23(), "h23");
    const double k = op.k();
    const double x1 = g.h12() * (k + 2.0) * op.epsilon();
    const double x2 = g.h23() * k * (k + 2.0) / (k + 1.0) * op.epsilon();
    return Tangents{1.0 / (k + 2.0), std::log1p(x1), detail::tangent_defect(x1),
                    std::log1p(x2), detail::tangent_defect(x2), k + 1.0};
}

// End-point chords of both curves; meeting point a b / (a + b).
double chord_lower(double a, double b) { return a * b / (a + b); }

// Second-order Taylor curves a1 eps - a1^2 eps^2 / (2 beta) and
// a2 eps - w a2^2 eps^2 / (2 (1 - beta)) meet at the root in [0, 1] of
// (a2 - a1) beta^2 + (eps (a1^2 + w a2^2) / 2 + a1 - a2) beta - a1^2 eps / 2.
struct TaylorLower {
    double value;
    double beta;
    bool degenerate;
};

TaylorLower taylor_lower(double a1, double a2, double w, double eps) {
    const double delta = a2 - a1;
    const double mix = a1 * a1 + w * a2 * a2;
    const double root = std::sqrt(4.0 * delta * delta + eps * eps * mix * mix +
                                  4.0 * eps * delta * (a1 * a1 - w * a2 * a2));
    const double value = eps * (2.0 * a2 + 2.0 * a1 - eps * mix - root) / 4.0;

    const double qa = delta;
    const double qb = 0.5 * eps * mix - delta;
    const double qc = -0.5 * a1 * a1 * eps;
    const bool flat = std::fabs(delta) <= 1e-12 * std::max(a1, a2);
    double beta;
    if (flat) {
        beta = -qc / qb;
    } else {
        const double disc = std::sqrt(qb * qb - 4.0 * qa * qc);
        const double q = -0.5 * (qb + std::copysign(disc, qb));
        const double r1 = q / qa;
        const double r2 = qc / q;
        beta = (r2 >= 0.0 && r2 <= 1.0) ? r2 : r1;
    }
    return TaylorLower{std::max(0.0, value), beta, flat};
}

BoundPair high_tern(const Tangents& t, double chord_a, double chord_b) {
    const double lower = chord_lower(chord_a, chord_b);
    if (degenerate(t)) {
        // Tangents collapse onto the curves' chords; fall back to the end-point values.
        return BoundPair{lower, std::min(chord_a, chord_b), std::nullopt, true};
    }
    return BoundPair{lower, closed_form_upper(t), intersect(t).beta, false};
}

}  // namespace

BoundPair ncp_bounds_high_tern(const LinkGains& gains, const OperatingPoint& op) {
    const Tangents t = ncp_tangents(gains, op);
    const double a = std::log1p(gains.h13() * op.epsilon());
    const double b = std::log1p(op.k() * gains.h23() * op.epsilon()) / op.k();
    return high_tern(t, a, b);
}

BoundPair cp_bounds_high_tern(const LinkGains& gains, const OperatingPoint& op) {
    const Tangents t = cp_tangents(gains, op);
    const double a = std::log1p(gains.h12() * op.epsilon());
    const double b = std::log1p(op.k() * gains.h23() * op.epsilon()) / (op.k() + 1.0);
    return high_tern(t, a, b);
}

BoundPair ncp_bounds_low_tern(const LinkGains& gains, const OperatingPoint& op) {
    require_alive(gains.h13(), "h13");
    require_alive(gains.h23(), "h23");
    const double eps = op.epsilon();
    const double k = op.k();
    const TaylorLower lo = taylor_lower(gains.h13(), gains.h23(), k, eps);
    const double upper = std::min(std::log1p(gains.h13() * eps), std::log1p(k * gains.h23() * eps) / k);
    return BoundPair{lo.value, upper, lo.beta, lo.degenerate};
}

BoundPair cp_bounds_low_tern(const LinkGains& gains, const OperatingPoint& op) {
    require_alive(gains.h12(), "h12");
    require_alive(gains.h23(), "h23");
    const double eps = op.epsilon();
    const double k = op.k();
    // Relayed hop behaves like a direct link of gain k h23 / (k + 1) whose
    // curvature weight is k + 1.
    const double relayed = k * gains.h23() / (k + 1.0);
    const TaylorLower lo = taylor_lower(gains.h12(), relayed, k + 1.0, eps);
    const double upper =
        std::min(std::log1p(gains.h12() * eps), std::log1p(k * gains.h23() * eps) / (k + 1.0));
    return BoundPair{lo.value, upper, lo.beta, lo.degenerate};
}

TangentIntersection ncp_tangent_intersection(const LinkGains& gains, const OperatingPoint& op) {
    return intersect(ncp_tangents(gains, op));
}

TangentIntersection cp_tangent_intersection(const LinkGains& gains, const OperatingPoint& op) {
    return intersect(cp_tangents(gains, op));
}

double low_tern_gain_limit(const LinkGains& gains, double k) {
    if (!std::isfinite(k) || k <= 0.0) throw ValidationError("k must be finite and > 0");
    if (gains.h12() == 0.0 || gains.h13() == 0.0 || gains.h23() == 0.0) {
        throw ValidationError("low_tern_gain_limit requires all gains > 0");
    }
    return std::min(gains.h12(), k / (k + 1.0) * gains.h23()) / std::min(gains.h13(), gains.h23());
}

double high_tern_gain_limit(double k) {
    if (!std::isfinite(k) || k <= 0.0) throw ValidationError("k must be finite and > 0");
    return (k + 1.0) / (k + 2.0);
}

double small_k_gain_slope(const LinkGains& gains, double eps) {
    if (!std::isfinite(eps) || eps <= 0.0) throw ValidationError("eps must be finite and > 0");
    require_alive(gains.h13(), "h13");
    require_alive(gains.h23(), "h23");
    return gains.h23() * eps / std::log1p(gains.h13() * eps);
}

}  // namespace collabgain
