#include "intorbit/decimal.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "intorbit/errors.hpp"

namespace intorbit {
namespace {

using boost::multiprecision::cpp_int;

// Exponents beyond this are far outside the binary64 range; rejecting them
// up front keeps the exact arithmetic small.
constexpr long kMaxDecimalExponent = 1000;

struct DecimalParts {
  bool negative = false;
  std::string digits;  // significand digits with the point removed
  long exponent = 0;   // value = digits * 10^exponent
};

DecimalParts split_decimal(std::string_view text) {
  DecimalParts parts;
  std::size_t i = 0;
  auto fail = [&](const char* why) {
    throw DecimalError("invalid decimal '" + std::string(text) + "': " + why);
  };
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    parts.negative = text[i] == '-';
    ++i;
  }
  std::size_t int_digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    parts.digits += text[i++];
    ++int_digits;
  }
  std::size_t frac_digits = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      parts.digits += text[i++];
      ++frac_digits;
    }
  }
  if (int_digits + frac_digits == 0) fail("no digits");
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    long e = 0;
    std::size_t exp_digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (e <= kMaxDecimalExponent) e = e * 10 + (text[i] - '0');
      ++i;
      ++exp_digits;
    }
    if (exp_digits == 0) fail("empty exponent");
    if (e > kMaxDecimalExponent) fail("exponent out of range");
    parts.exponent = exp_negative ? -e : e;
  }
  if (i != text.size()) fail("trailing characters");
  parts.exponent -= static_cast<long>(frac_digits);
  return parts;
}

}  // namespace

Rational parse_decimal(std::string_view text) {
  const DecimalParts parts = split_decimal(text);
  cpp_int significand(parts.digits);
  if (parts.negative) significand = -significand;
  const cpp_int scale = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(std::labs(parts.exponent)));
  if (parts.exponent >= 0) return Rational(significand * scale);
  return Rational(significand, scale);
}

Rational to_rational(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("to_rational of non-finite double");
  int exp = 0;
  const double frac = std::frexp(v, &exp);
  // frac * 2^53 is an integer for every finite double.
  cpp_int mant(static_cast<long long>(std::ldexp(frac, 53)));
  exp -= 53;
  if (exp >= 0) return Rational(mant << exp);
  return Rational(mant, cpp_int(1) << -exp);
}

double nearest_double(std::string_view text) {
  split_decimal(text);  // validates the grammar
  std::string_view body = text;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec == std::errc::result_out_of_range) {
    throw DecimalError("decimal '" + std::string(text) + "' is outside the binary64 range");
  }
  if (ec != std::errc() || ptr != body.data() + body.size()) {
    throw DecimalError("invalid decimal '" + std::string(text) + "'");
  }
  return v;
}

Interval enclose_decimal(std::string_view text, EnclosureMode mode) {
  const double nearest = nearest_double(text);
  if (mode == EnclosureMode::Thin) return Interval::point(nearest);
  const Rational exact = parse_decimal(text);
  const Rational rounded = to_rational(nearest);
  if (rounded == exact) return Interval::point(nearest);
  if (mode == EnclosureMode::NeighborPair) {
    return Interval::make(next_down(nearest), next_up(nearest));
  }
  return rounded < exact ? Interval::make(nearest, next_up(nearest))
                         : Interval::make(next_down(nearest), nearest);
}

bool contains(const Interval& x, const Rational& v) {
  const bool above_lo = std::isinf(x.lo()) ? x.lo() < 0 : to_rational(x.lo()) <= v;
  const bool below_hi = std::isinf(x.hi()) ? x.hi() > 0 : v <= to_rational(x.hi());
  return above_lo && below_hi;
}

std::string_view to_string(EnclosureMode mode) {
  switch (mode) {
    case EnclosureMode::Thin:
      return "thin";
    case EnclosureMode::NeighborPair:
      return "pair";
    case EnclosureMode::Tight:
      return "tight";
  }
  return "?";
}

EnclosureMode parse_enclosure_mode(std::string_view name) {
  if (name == "thin") return EnclosureMode::Thin;
  if (name == "pair") return EnclosureMode::NeighborPair;
  if (name == "tight") return EnclosureMode::Tight;
  throw std::invalid_argument("unknown enclosure mode '" + std::string(name) +
                              "' (expected thin, pair or tight)");
}

}  // namespace intorbit
