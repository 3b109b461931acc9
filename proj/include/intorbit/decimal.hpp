#pragma once

#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "intorbit/interval.hpp"

namespace intorbit {

using Rational = boost::multiprecision::cpp_rational;

/// How a decimal literal becomes an interval.
///   Thin         - [fl(v), fl(v)], fl = round to nearest
///   NeighborPair - [pred(fl(v)), succ(fl(v))]; [v, v] if v is a double
///   Tight        - [RD(v), RU(v)], the narrowest enclosure (one ulp wide
///                  unless v is a double)
enum class EnclosureMode { Thin, NeighborPair, Tight };

/// Exact value of a decimal string: [+-]digits[.digits][(e|E)[+-]digits].
/// Throws DecimalError on anything else.
Rational parse_decimal(std::string_view text);

/// Exact rational value of a finite double.
Rational to_rational(double v);

Interval enclose_decimal(std::string_view text, EnclosureMode mode);

/// Nearest double to a decimal string; throws DecimalError if unparseable or
/// outside the binary64 range.
double nearest_double(std::string_view text);

/// Exact comparison lo <= v <= hi. Infinite endpoints compare as unbounded.
bool contains(const Interval& x, const Rational& v);

std::string_view to_string(EnclosureMode mode);
/// Accepts "thin", "pair", "tight". Throws std::invalid_argument otherwise.
EnclosureMode parse_enclosure_mode(std::string_view name);

}  // namespace intorbit
