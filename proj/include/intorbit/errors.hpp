#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace intorbit {

/// Malformed decimal literal handed to enclose_decimal.
class DecimalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax error in an extension expression. `position` is a 0-based
/// character offset into the source text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operation outside the domain of interval arithmetic (e.g. division by an
/// interval containing zero, midpoint of an unbounded interval).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two enclosures of the same true value turned out disjoint. This can only
/// happen if an enclosure is not rigorous, i.e. an arithmetic bug.
class SoundnessFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace intorbit
