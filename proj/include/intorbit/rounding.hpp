#pragma once

// Directed rounding of single binary64 operations without touching the
// floating-point environment. Each primitive returns the pair
// {RD(a op b), RU(a op b)} of the exact real result.

namespace intorbit {

/// How endpoint results are rounded.
///   directed  - true round-down / round-up (tightest enclosure)
///   ulp_step  - round-to-nearest, then one ulp outward unless exact
///   nearest   - round-to-nearest only; NOT rigorous, used to check that
///               reproduction tests are sensitive to rounding
enum class Rounding { directed, ulp_step, nearest };

struct RoundedPair {
  double down;
  double up;
};

RoundedPair add_rounded(double a, double b, Rounding mode = Rounding::directed) noexcept;
RoundedPair sub_rounded(double a, double b, Rounding mode = Rounding::directed) noexcept;
RoundedPair mul_rounded(double a, double b, Rounding mode = Rounding::directed) noexcept;
RoundedPair div_rounded(double a, double b, Rounding mode = Rounding::directed) noexcept;

/// Adjacent representable doubles toward -inf / +inf.
double next_down(double x) noexcept;
double next_up(double x) noexcept;

}  // namespace intorbit
