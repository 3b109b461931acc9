#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "intorbit/rounding.hpp"

namespace intorbit {

/// Closed interval [lo, hi] with binary64 endpoints.
///
/// Invariants: lo <= hi, neither endpoint NaN. Infinite endpoints only arise
/// from overflow inside arithmetic; the checked factory rejects them only if
/// they would violate ordering.
class Interval {
 public:
  /// Point interval [0, 0].
  constexpr Interval() noexcept = default;

  /// Point interval [v, v]. Throws std::invalid_argument for NaN.
  static Interval point(double v);

  /// [lo, hi] exactly, no rounding. Throws std::invalid_argument when
  /// lo > hi or either endpoint is NaN.
  static Interval make(double lo, double hi);

  constexpr double lo() const noexcept { return lo_; }
  constexpr double hi() const noexcept { return hi_; }

  bool is_point() const noexcept { return lo_ == hi_; }
  bool is_bounded() const noexcept;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  constexpr Interval(double lo, double hi) noexcept : lo_(lo), hi_(hi) {}

  double lo_ = 0.0;
  double hi_ = 0.0;

  friend Interval from_ordered(double lo, double hi) noexcept;
};

/// Unchecked construction for arithmetic kernels that already guarantee
/// ordering.
Interval from_ordered(double lo, double hi) noexcept;

inline Interval make_interval(double lo, double hi) { return Interval::make(lo, hi); }

// Arithmetic. Every result encloses {x op y : x in X, y in Y}; with
// Rounding::directed each endpoint is the tightest representable bound of the
// endpoint formula.
Interval add(const Interval& x, const Interval& y, Rounding mode = Rounding::directed);
Interval sub(const Interval& x, const Interval& y, Rounding mode = Rounding::directed);
Interval mul(const Interval& x, const Interval& y, Rounding mode = Rounding::directed);
/// Throws DomainError when 0 is in y.
Interval div(const Interval& x, const Interval& y, Rounding mode = Rounding::directed);
Interval neg(const Interval& x) noexcept;
/// x^k with the even/odd case split, so even powers are never negative.
Interval pow_int(const Interval& x, unsigned k, Rounding mode = Rounding::directed);

/// hi - lo rounded upward.
double width(const Interval& x) noexcept;

/// Double in [lo, hi] nearest to (lo + hi) / 2. Throws DomainError for an
/// unbounded interval.
double midpoint(const Interval& x);

/// Mid-rad radius: max(m - lo, hi - m) rounded upward, with m = midpoint(x).
/// Always >= width / 2; for a one-ulp interval it equals one ulp.
double radius(const Interval& x);

std::optional<Interval> intersect(const Interval& x, const Interval& y) noexcept;
Interval hull(const Interval& x, const Interval& y) noexcept;

bool contains(const Interval& x, double v) noexcept;
/// y is a subset of x.
bool contains(const Interval& x, const Interval& y) noexcept;

/// How a reported interval size is measured.
///   endpoint - width(), i.e. RU(hi - lo)
///   midrad   - 2 * radius(), the diameter of the mid-rad representation
enum class WidthMetric { endpoint, midrad };

double measure(const Interval& x, WidthMetric metric);

/// "[lo, hi]" with 17 significant digits per endpoint.
std::string to_string(const Interval& x);
std::ostream& operator<<(std::ostream& os, const Interval& x);

/// Round-trip exact text for a double ("%.17g").
std::string format_double(double v);

}  // namespace intorbit
