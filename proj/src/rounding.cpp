#include "intorbit/rounding.hpp"

#include <cmath>
#include <limits>

namespace intorbit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMax = std::numeric_limits<double>::max();

// Below this magnitude an FMA residual may itself underflow, so products and
// quotients are recomputed on normalised significands. 2^-968 leaves 53 bits
// of headroom above DBL_MIN.
const double kTiny = std::ldexp(1.0, -968);

// `err` is the exact value (exact result - rounded), or NaN when unknown.
RoundedPair finish(double rounded, double err, Rounding mode) noexcept {
  switch (mode) {
    case Rounding::nearest:
      return {rounded, rounded};
    case Rounding::ulp_step:
      if (err == 0.0) return {rounded, rounded};
      return {next_down(rounded), next_up(rounded)};
    case Rounding::directed:
      break;
  }
  if (std::isnan(err)) return {next_down(rounded), next_up(rounded)};
  return {err < 0.0 ? next_down(rounded) : rounded, err > 0.0 ? next_up(rounded) : rounded};
}

// Directed bounds of fine * 2^e, given directed bounds of a value in
// [0.25, 4). Scaling back up by 2^-e is exact for the candidates, so the
// comparison decides whether ldexp rounded inward.
RoundedPair rescale(RoundedPair fine, int e) noexcept {
  double d = std::ldexp(fine.down, e);
  if (std::ldexp(d, -e) > fine.down) d = next_down(d);
  double u = std::ldexp(fine.up, e);
  if (std::ldexp(u, -e) < fine.up) u = next_up(u);
  return {d, u};
}

double significand(double v, int& e) noexcept {
  e = std::ilogb(v);
  return std::scalbn(v, -e);
}

RoundedPair overflowed(double rounded, Rounding mode) noexcept {
  if (mode == Rounding::nearest) return {rounded, rounded};
  return rounded > 0 ? RoundedPair{kMax, kInf} : RoundedPair{-kInf, -kMax};
}

}  // namespace

double next_down(double x) noexcept { return std::nextafter(x, -kInf); }
double next_up(double x) noexcept { return std::nextafter(x, kInf); }

RoundedPair add_rounded(double a, double b, Rounding mode) noexcept {
  const double s = a + b;
  if (std::isnan(s)) return {-kInf, kInf};  // inf + (-inf)
  if (std::isinf(s)) {
    if (std::isinf(a) || std::isinf(b)) return {s, s};
    return overflowed(s, mode);
  }
  // TwoSum (Knuth): err is exactly (a + b) - s.
  const double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  if (!std::isfinite(err)) err = std::numeric_limits<double>::quiet_NaN();
  return finish(s, err, mode);
}

RoundedPair sub_rounded(double a, double b, Rounding mode) noexcept {
  return add_rounded(a, -b, mode);
}

RoundedPair mul_rounded(double a, double b, Rounding mode) noexcept {
  // 0 * inf is taken as 0: the endpoint is a limit, not an IEEE product.
  if (a == 0.0 || b == 0.0) return {0.0, 0.0};
  const double p = a * b;
  if (std::isinf(a) || std::isinf(b)) return {p, p};
  if (std::isinf(p)) return overflowed(p, mode);
  if (std::fabs(p) < kTiny) {
    if (mode != Rounding::directed) return finish(p, std::numeric_limits<double>::quiet_NaN(), mode);
    int ea = 0, eb = 0;
    const double sa = significand(a, ea);
    const double sb = significand(b, eb);
    const double ps = sa * sb;
    return rescale(finish(ps, std::fma(sa, sb, -ps), mode), ea + eb);
  }
  return finish(p, std::fma(a, b, -p), mode);
}

RoundedPair div_rounded(double a, double b, Rounding mode) noexcept {
  if (b == 0.0) return {-kInf, kInf};
  if (a == 0.0) return {0.0, 0.0};
  if (std::isinf(a) && std::isinf(b)) {
    const bool positive = std::signbit(a) == std::signbit(b);
    return positive ? RoundedPair{0.0, kInf} : RoundedPair{-kInf, 0.0};
  }
  const double q = a / b;
  if (std::isinf(a) || std::isinf(b)) return {q, q};
  if (std::isinf(q)) return overflowed(q, mode);
  if (std::fabs(q) < kTiny || std::fabs(a) < kTiny || std::fabs(b) < kTiny) {
    if (mode != Rounding::directed) return finish(q, std::numeric_limits<double>::quiet_NaN(), mode);
    int ea = 0, eb = 0;
    const double sa = significand(a, ea);
    const double sb = significand(b, eb);
    const double qs = sa / sb;
    const double rem = std::fma(-qs, sb, sa);
    return rescale(finish(qs, sb > 0.0 ? rem : -rem, mode), ea - eb);
  }
  // rem = a - q*b exactly; sign(a/b - q) = sign(rem) * sign(b).
  const double rem = std::fma(-q, b, a);
  return finish(q, b > 0.0 ? rem : -rem, mode);
}

}  // namespace intorbit
