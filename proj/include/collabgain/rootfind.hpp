#pragma once

#include <cmath>
#include <concepts>
#include <string>

#include "collabgain/error.hpp"

namespace collabgain::rootfind {

inline constexpr double kDefaultAbsTol = 1e-12;
inline constexpr int kDefaultMaxIter = 200;

/// An interval over which f changes sign.
struct Bracket {
    double lo;
    double hi;
    int f_lo_sign;
    int f_hi_sign;
};

struct Root {
    double x;
    Bracket final_bracket;
    int iterations;
};

class NoSignChangeError : public SolverError {
public:
    NoSignChangeError(double lo, double hi)
        : SolverError("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]"),
          lo_(lo), hi_(hi) {}

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }

private:
    double lo_;
    double hi_;
};

class MaxIterationsError : public SolverError {
public:
    explicit MaxIterationsError(Bracket last)
        : SolverError("bisection did not converge; last bracket [" + std::to_string(last.lo) +
                      ", " + std::to_string(last.hi) + "]"),
          last_(last) {}

    const Bracket& last_bracket() const noexcept { return last_; }

private:
    Bracket last_;
};

inline int sign_of(double v) noexcept { return (v > 0.0) - (v < 0.0); }

/// Evaluates f at both ends. Throws NoSignChangeError unless the signs differ.
/// A zero at either end counts as a sign change.
template <std::invocable<double> F>
Bracket make_bracket(F&& f, double lo, double hi) {
    if (!(lo < hi)) throw ValidationError("bracket requires lo < hi");
    const int slo = sign_of(f(lo));
    const int shi = sign_of(f(hi));
    if (slo == shi) throw NoSignChangeError(lo, hi);
    return Bracket{lo, hi, slo, shi};
}

/// Bisection on a continuous, strictly monotone f.
///
/// Stops when the bracket is narrower than abs_tol, when f vanishes at the
/// midpoint, or when the midpoint is no longer representable strictly inside
/// the bracket. Returns whichever final endpoint has the smaller |f|.
template <std::invocable<double> F>
Root solve_monotone_ex(F&& f, Bracket bracket, double abs_tol = kDefaultAbsTol,
                       int max_iter = kDefaultMaxIter) {
    if (!(abs_tol > 0.0)) throw ValidationError("abs_tol must be > 0");
    if (max_iter <= 0) throw ValidationError("max_iter must be > 0");
    if (!(bracket.lo < bracket.hi) || bracket.f_lo_sign == bracket.f_hi_sign) {
        throw NoSignChangeError(bracket.lo, bracket.hi);
    }
    if (bracket.f_lo_sign == 0) return Root{bracket.lo, bracket, 0};
    if (bracket.f_hi_sign == 0) return Root{bracket.hi, bracket, 0};

    double lo = bracket.lo;
    double hi = bracket.hi;
    double f_lo = NAN;
    double f_hi = NAN;
    for (int iter = 0; iter <= max_iter; ++iter) {
        const Bracket current{lo, hi, bracket.f_lo_sign, bracket.f_hi_sign};
        const double mid = lo + 0.5 * (hi - lo);
        if (hi - lo <= abs_tol || !(mid > lo && mid < hi)) {
            if (std::isnan(f_lo)) f_lo = f(lo);
            if (std::isnan(f_hi)) f_hi = f(hi);
            return Root{std::fabs(f_lo) <= std::fabs(f_hi) ? lo : hi, current, iter};
        }
        if (iter == max_iter) throw MaxIterationsError(current);
        const double f_mid = f(mid);
        const int s = sign_of(f_mid);
        if (s == 0) return Root{mid, Bracket{mid, mid, 0, 0}, iter + 1};
        if (s == bracket.f_lo_sign) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    throw MaxIterationsError(Bracket{lo, hi, bracket.f_lo_sign, bracket.f_hi_sign});
}

template <std::invocable<double> F>
double solve_monotone(F&& f, Bracket bracket, double abs_tol = kDefaultAbsTol,
                      int max_iter = kDefaultMaxIter) {
    return solve_monotone_ex(std::forward<F>(f), bracket, abs_tol, max_iter).x;
}

/// make_bracket followed by solve_monotone.
template <std::invocable<double> F>
double find_root(F&& f, double lo, double hi, double abs_tol = kDefaultAbsTol,
                 int max_iter = kDefaultMaxIter) {
    const Bracket b = make_bracket(f, lo, hi);
    return solve_monotone(f, b, abs_tol, max_iter);
}

}  // namespace collabgain::rootfind
