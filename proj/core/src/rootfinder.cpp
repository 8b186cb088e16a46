#include "cgq/rootfinder.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "cgq/error.hpp"

namespace cgq {

namespace {

void require_monic(const Polynomial& p, int min_degree) {
  if (p.degree() < min_degree) {
    fail(ErrorKind::InvalidArgument, "polynomial of degree " + std::to_string(p.degree()) +
                                         " where at least " + std::to_string(min_degree) +
                                         " is needed");
  }
  if (p.leading() != BigReal(1)) {
    fail(ErrorKind::InvalidArgument, "polynomial is not monic");
  }
}

bool opposite_signs(int a, int b) { return (a < 0 && b > 0) || (a > 0 && b < 0); }

}  // namespace

Interval laguerre_bounds(const Polynomial& p) {
  require_monic(p, 2);
  WorkingPrecision scope(p.precision());
  const auto n = static_cast<std::size_t>(p.degree());
  const BigReal& a1 = p[n - 1];
  const BigReal& a2 = p[n - 2];
  const BigReal count(n);
  const BigReal sum = -a1;                           // Σ x_i
  const BigReal sum_sq = a1 * a1 - BigReal(2) * a2;  // Σ x_i²
  const BigReal mean = sum / count;
  BigReal variance = sum_sq / count - mean * mean;
  if (variance.sign() < 0) {
    const long half = working_precision().bits / 2;
    const BigReal slack = pow2(-half) * max(BigReal(1), abs(sum_sq / count));
    if (-variance > slack) {
      fail(ErrorKind::NegativeVariance,
           "root variance " + to_scientific(variance, 6) + " is negative");
    }
    variance = BigReal(0);
  }
  const BigReal radius = sqrt(BigReal(n - 1) * variance);
  return {mean - radius, mean + radius};
}

Interval clip_to_support(const Interval& bounds, const Support& support) {
  WorkingPrecision scope(std::max(bounds.lo.precision(), bounds.hi.precision()));
  BigReal lo = bounds.lo;
  BigReal hi = bounds.hi;
  if (std::isfinite(support.lo)) lo = max(lo, BigReal(support.lo));
  if (std::isfinite(support.hi)) hi = min(hi, BigReal(support.hi));
  if (!(lo < hi)) {
    fail(ErrorKind::EmptyIntersection, "root bounds [" + to_scientific(bounds.lo, 8) + ", " +
                                           to_scientific(bounds.hi, 8) +
                                           "] miss the support");
  }
  return {std::move(lo), std::move(hi)};
}

std::vector<RootBracket> isolate_roots(const Polynomial& p, const Interval& interval,
                                       std::size_t grid_intervals) {
  if (p.degree() < 1) fail(ErrorKind::InvalidArgument, "isolate_roots needs degree >= 1");
  WorkingPrecision scope(p.precision());
  const auto n = static_cast<std::size_t>(p.degree());
  const std::size_t cells = grid_intervals == 0 ? 100 * n : grid_intervals;
  const BigReal width = interval.hi - interval.lo;
  const BigReal divisor(cells);

  std::vector<BigReal> xs;
  std::vector<int> signs;
  xs.reserve(cells + 1);
  signs.reserve(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) {
    BigReal x = (i == cells) ? interval.hi.rounded(working_precision())
                             : interval.lo + (width * BigReal(i)) / divisor;
    signs.push_back(eval(p, x).sign());
    xs.push_back(std::move(x));
  }

  std::vector<RootBracket> brackets;
  for (std::size_t i = 0; i <= cells; ++i) {
    if (signs[i] == 0) {
      brackets.push_back({xs[i], xs[i]});
    } else if (i < cells && opposite_signs(signs[i], signs[i + 1])) {
      brackets.push_back({xs[i], xs[i + 1]});
    }
  }
  if (brackets.size() != n) {
    fail(ErrorKind::BracketCountMismatch, "found " + std::to_string(brackets.size()) +
                                              " sign changes for a degree " + std::to_string(n) +
                                              " polynomial on a " + std::to_string(cells) +
                                              "-cell grid");
  }
  return brackets;
}

BigReal brent_tolerance(const Interval& interval, Precision p) {
  WorkingPrecision scope(p);
  const BigReal unit = pow2(-(p.bits - 10));
  return max(unit, abs(interval.hi - interval.lo) * unit);
}

BigReal brent_refine(const Polynomial& p, const RootBracket& bracket, const BigReal& tol) {
  WorkingPrecision scope(p.precision());
  const Precision prec = working_precision();
  if (bracket.exact()) return bracket.lo.rounded(prec);
  if (!(tol.sign() > 0)) fail(ErrorKind::InvalidArgument, "brent_refine needs tol > 0");

  const BigReal eps = pow2(1 - prec.bits);
  const BigReal half(0.5);
  const BigReal quarter_tol = tol * BigReal(0.25);

  BigReal a = bracket.lo.rounded(prec);
  BigReal b = bracket.hi.rounded(prec);
  BigReal fa = eval(p, a);
  BigReal fb = eval(p, b);
  if (fa.is_zero()) return a;
  if (fb.is_zero()) return b;
  if (!opposite_signs(fa.sign(), fb.sign())) {
    fail(ErrorKind::InvalidArgument, "bracket has no sign change");
  }
  BigReal c = a;
  BigReal fc = fa;

  const long max_iterations = 4 * prec.bits;
  for (long iter = 0; iter < max_iterations; ++iter) {
    const BigReal prev_step = b - a;
    if (abs(fc) < abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    // Stopping at |c − b|/2 ≤ tol_act leaves b within 2·tol_act of the root.
    const BigReal tol_act = BigReal(2) * eps * abs(b) + quarter_tol;
    BigReal new_step = (c - b) * half;
    if (abs(new_step) <= tol_act || fb.is_zero()) return b;

    if (abs(prev_step) >= tol_act && abs(fa) > abs(fb)) {
      const BigReal cb = c - b;
      BigReal num;
      BigReal den;
      if (a == c) {
        const BigReal t1 = fb / fa;
        num = cb * t1;
        den = BigReal(1) - t1;
      } else {
        const BigReal q = fa / fc;
        const BigReal t1 = fb / fc;
        const BigReal t2 = fb / fa;
        num = t2 * (cb * q * (q - t1) - (b - a) * (t1 - BigReal(1)));
        den = (q - BigReal(1)) * (t1 - BigReal(1)) * (t2 - BigReal(1));
      }
      if (num.sign() > 0) {
        den = -den;
      } else {
        num = -num;
      }
      if (num < BigReal(0.75) * cb * den - abs(tol_act * den) * half &&
          num < abs(prev_step * den * half)) {
        new_step = num / den;
      }
    }
    if (abs(new_step) < tol_act) new_step = new_step.sign() > 0 ? tol_act : -tol_act;

    a = b;
    fa = fb;
    b += new_step;
    fb = eval(p, b);
    if ((fb.sign() > 0 && fc.sign() > 0) || (fb.sign() < 0 && fc.sign() < 0)) {
      c = a;
      fc = fa;
    }
  }
  fail(ErrorKind::NoConvergence,
       "Brent's method did not converge in " + std::to_string(max_iterations) + " iterations");
}

std::vector<BigReal> nodes(const Polynomial& p, const WeightSpec& spec) {
  require_monic(p, 1);
  WorkingPrecision scope(p.precision());
  const Precision prec = working_precision();

  std::vector<BigReal> roots;
  if (p.degree() == 1) {
    roots.push_back(BigReal(0) - p[0]);  // 0 − c₀ avoids a signed zero
  } else {
    Interval bounds = laguerre_bounds(p);
    // For n = 2 the bounds are the roots themselves, so rounding could push a
    // root just outside; widen slightly before clipping.
    const BigReal pad = max(BigReal(1), bounds.width()) * pow2(-(prec.bits / 2));
    bounds.lo -= pad;
    bounds.hi += pad;
    const Interval interval = clip_to_support(bounds, spec.support);
    const BigReal tol = brent_tolerance(interval, prec);
    const BigReal zero(0);
    const bool zero_is_root = eval(p, zero).is_zero();
    for (const RootBracket& bracket : isolate_roots(p, interval)) {
      // Symmetric weights put an exact root at the origin for odd n; Brent
      // would only get within tol of it.
      if (zero_is_root && bracket.lo <= zero && zero <= bracket.hi) {
        roots.push_back(zero);
      } else {
        roots.push_back(brent_refine(p, bracket, tol));
      }
    }
  }

  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i > 0 && !(roots[i - 1] < roots[i])) {
      fail(ErrorKind::BracketCountMismatch, "refined roots are not strictly increasing");
    }
    const bool inside = BigReal(spec.support.lo) < roots[i] && roots[i] < BigReal(spec.support.hi);
    if (!inside) {
      fail(ErrorKind::EmptyIntersection,
           "root " + to_scientific(roots[i], 12) + " lies outside the support");
    }
  }
  return roots;
}

}  // namespace cgq
