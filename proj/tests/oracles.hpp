#pragma once

// Slow reference computations used only by the tests. They share no code with
// the library: allocations come from a ternary search of the max-min problem
// in long double, minimal TERNs from bisecting that oracle in log(eps).

#include <algorithm>
#include <cmath>

namespace oracle {

inline long double shannon(long double c, long double beta) {
    if (beta <= 0.0L) return 0.0L;
    return beta * std::log1p(c / beta);
}

/// max over beta of min{S(a, beta), S(b, 1 - beta) / w}: the fair base rate.
struct MaxMin {
    long double beta;
    long double value;
};

inline MaxMin max_min(long double a, long double b, long double w) {
    auto f = [&](long double beta) { return std::min(shannon(a, beta), shannon(b, 1.0L - beta) / w); };
    long double lo = 0.0L;
    long double hi = 1.0L;
    for (int i = 0; i < 400; ++i) {
        const long double m1 = lo + (hi - lo) / 3.0L;
        const long double m2 = hi - (hi - lo) / 3.0L;
        if (f(m1) < f(m2)) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    const long double beta = 0.5L * (lo + hi);
    return {beta, f(beta)};
}

inline MaxMin ncp(double h13, double h23, double eps, double k) {
    return max_min(static_cast<long double>(h13) * eps, static_cast<long double>(h23) * k * eps, k);
}

inline MaxMin cp(double h12, double h23, double eps, double k) {
    return max_min(static_cast<long double>(h12) * eps, static_cast<long double>(h23) * k * eps, k + 1.0L);
}

/// Least eps with base(eps) >= rate, for a base-rate oracle increasing in eps.
template <class Base>
double min_eps(Base base, double rate) {
    long double lo = 1e-12L;
    long double hi = 1.0L;
    while (base(static_cast<double>(hi)) < rate) hi *= 2.0L;
    for (int i = 0; i < 300; ++i) {
        const long double mid = std::sqrt(lo * hi);
        if (base(static_cast<double>(mid)) < rate) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return static_cast<double>(std::sqrt(lo * hi));
}

inline double rel_err(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

}  // namespace oracle
