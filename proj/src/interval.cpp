#include "intorbit/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "intorbit/errors.hpp"

namespace intorbit {

Interval from_ordered(double lo, double hi) noexcept { return Interval(lo, hi); }

Interval Interval::point(double v) { return make(v, v); }

Interval Interval::make(double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi)) {
    throw std::invalid_argument("interval endpoint is NaN");
  }
  if (lo > hi) {
    throw std::invalid_argument("interval lower endpoint " + format_double(lo) +
                                " exceeds upper endpoint " + format_double(hi));
  }
  return Interval(lo, hi);
}

bool Interval::is_bounded() const noexcept { return std::isfinite(lo_) && std::isfinite(hi_); }

Interval add(const Interval& x, const Interval& y, Rounding mode) {
  return from_ordered(add_rounded(x.lo(), y.lo(), mode).down, add_rounded(x.hi(), y.hi(), mode).up);
}

Interval sub(const Interval& x, const Interval& y, Rounding mode) {
  return from_ordered(sub_rounded(x.lo(), y.hi(), mode).down, sub_rounded(x.hi(), y.lo(), mode).up);
}

Interval mul(const Interval& x, const Interval& y, Rounding mode) {
  const RoundedPair p[4] = {
      mul_rounded(x.lo(), y.lo(), mode),
      mul_rounded(x.lo(), y.hi(), mode),
      mul_rounded(x.hi(), y.lo(), mode),
      mul_rounded(x.hi(), y.hi(), mode),
  };
  double lo = p[0].down;
  double hi = p[0].up;
  for (const auto& r : p) {
    lo = std::min(lo, r.down);
    hi = std::max(hi, r.up);
  }
  return from_ordered(lo, hi);
}

Interval div(const Interval& x, const Interval& y, Rounding mode) {
  if (y.lo() <= 0.0 && y.hi() >= 0.0) {
    throw DomainError("division by interval " + to_string(y) + " containing zero");
  }
  const RoundedPair q[4] = {
      div_rounded(x.lo(), y.lo(), mode),
      div_rounded(x.lo(), y.hi(), mode),
      div_rounded(x.hi(), y.lo(), mode),
      div_rounded(x.hi(), y.hi(), mode),
  };
  double lo = q[0].down;
  double hi = q[0].up;
  for (const auto& r : q) {
    lo = std::min(lo, r.down);
    hi = std::max(hi, r.up);
  }
  return from_ordered(lo, hi);
}

Interval neg(const Interval& x) noexcept { return from_ordered(-x.hi(), -x.lo()); }

namespace {

// Bounds on a^k for a >= 0. Every partial product is non-negative, so
// rounding each step in one direction keeps the chain one-sided.
RoundedPair pow_nonneg(double a, unsigned k, Rounding mode) {
  RoundedPair acc{1.0, 1.0};
  for (unsigned i = 0; i < k; ++i) {
    acc = {mul_rounded(acc.down, a, mode).down, mul_rounded(acc.up, a, mode).up};
  }
  return acc;
}

}  // namespace

Interval pow_int(const Interval& x, unsigned k, Rounding mode) {
  if (k == 0) return from_ordered(1.0, 1.0);
  if (k == 1) return x;
  const bool even = k % 2 == 0;
  if (x.lo() >= 0.0) {
    return from_ordered(pow_nonneg(x.lo(), k, mode).down, pow_nonneg(x.hi(), k, mode).up);
  }
  if (x.hi() <= 0.0) {
    const RoundedPair near = pow_nonneg(-x.hi(), k, mode);
    const RoundedPair far = pow_nonneg(-x.lo(), k, mode);
    if (even) return from_ordered(near.down, far.up);
    return from_ordered(-far.up, -near.down);
  }
  if (even) {
    return from_ordered(0.0, pow_nonneg(std::max(-x.lo(), x.hi()), k, mode).up);
  }
  return from_ordered(-pow_nonneg(-x.lo(), k, mode).up, pow_nonneg(x.hi(), k, mode).up);
}

double width(const Interval& x) noexcept { return sub_rounded(x.hi(), x.lo()).up; }

double midpoint(const Interval& x) {
  if (!x.is_bounded()) {
    throw DomainError("midpoint of unbounded interval " + to_string(x));
  }
  double m = x.lo() + x.hi();
  // Halving is exact outside the subnormal range, so this is the nearest
  // double to the exact midpoint.
  m = std::isfinite(m) ? 0.5 * m : 0.5 * x.lo() + 0.5 * x.hi();
  return std::clamp(m, x.lo(), x.hi());
}

double radius(const Interval& x) {
  const double m = midpoint(x);
  return std::max(sub_rounded(m, x.lo()).up, sub_rounded(x.hi(), m).up);
}

std::optional<Interval> intersect(const Interval& x, const Interval& y) noexcept {
  const double lo = std::max(x.lo(), y.lo());
  const double hi = std::min(x.hi(), y.hi());
  if (lo > hi) return std::nullopt;
  return from_ordered(lo, hi);
}

Interval hull(const Interval& x, const Interval& y) noexcept {
  return from_ordered(std::min(x.lo(), y.lo()), std::max(x.hi(), y.hi()));
}

bool contains(const Interval& x, double v) noexcept { return x.lo() <= v && v <= x.hi(); }

bool contains(const Interval& x, const Interval& y) noexcept {
  return x.lo() <= y.lo() && y.hi() <= x.hi();
}

double measure(const Interval& x, WidthMetric metric) {
  if (metric == WidthMetric::endpoint || !x.is_bounded()) return width(x);
  return 2.0 * radius(x);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_string(const Interval& x) {
  return "[" + format_double(x.lo()) + ", " + format_double(x.hi()) + "]";
}

std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << to_string(x); }

}  // namespace intorbit
