#pragma once

#include <cstddef>
#include <vector>

#include "cgq/big_real.hpp"
#include "cgq/moments.hpp"
#include "cgq/polynomial.hpp"

namespace cgq {

struct Interval {
  BigReal lo;
  BigReal hi;

  BigReal width() const { return hi - lo; }
};

/// [lo, hi] with a sign change of p across it, or lo == hi at an exact zero.
struct RootBracket {
  BigReal lo;
  BigReal hi;

  bool exact() const { return lo == hi; }
};

/// Laguerre–Samuelson interval mean ± sqrt((n−1)·variance) containing every
/// root of a monic, real-rooted p of degree n ≥ 2. The root mean and variance
/// come from the two leading coefficients. Throws NegativeVariance if the
/// variance is negative beyond 2^{−b/2}·max(1, S₂/n).
Interval laguerre_bounds(const Polynomial& p);

/// Intersection of `bounds` with `support`; an infinite endpoint leaves the
/// bound untouched. Throws EmptyIntersection if nothing of positive width is left.
Interval clip_to_support(const Interval& bounds, const Support& support);

/// Splits `interval` into `grid_intervals` equal cells (100·deg p when 0) and
/// returns one bracket per sign change between adjacent grid values, plus a
/// zero-width bracket for every grid point where p is exactly zero. Throws
/// BracketCountMismatch unless exactly deg p brackets are found.
std::vector<RootBracket> isolate_roots(const Polynomial& p, const Interval& interval,
                                       std::size_t grid_intervals = 0);

/// Refinement tolerance for roots found inside `interval` at precision `p`:
/// max(2^{−(b−10)}, width · 2^{−(b−10)}).
BigReal brent_tolerance(const Interval& interval, Precision p);

/// Brent's method (bisection, secant and inverse quadratic interpolation).
/// Throws NoConvergence after 4·b iterations.
BigReal brent_refine(const Polynomial& p, const RootBracket& bracket, const BigReal& tol);

/// The deg p roots of p in increasing order, each strictly inside the support.
/// p must be monic and real-rooted (π_n of a positive measure).
std::vector<BigReal> nodes(const Polynomial& p, const WeightSpec& spec);

}  // namespace cgq
