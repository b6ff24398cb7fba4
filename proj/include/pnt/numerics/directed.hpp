#pragma once

#include <string>

#include "pnt/numerics/log_scalar.hpp"

namespace pnt {

// Move a computed value outward by a few units in the last place of its
// log-magnitude. Every elementary operation below rounds this way so that
// the true result stays inside the returned enclosure.
LogScalar round_up(const LogScalar& v);
LogScalar round_down(const LogScalar& v);

// Enclosing bounds of a Combined sum, accounting for its rounding error.
LogScalar combined_upper(const Combined& c);
LogScalar combined_lower(const Combined& c);

/// Closed interval [lower, upper] with LogScalar endpoints.
///
/// Arithmetic is outward-monotone: the result encloses every real result of
/// operands drawn from the operand intervals.
class DirectedValue {
 public:
  DirectedValue() = default;
  // Throws DomainError if lower > upper.
  DirectedValue(LogScalar lower, LogScalar upper);

  // Enclosure of a single computed value, padded outward.
  static DirectedValue around(const LogScalar& v);
  static DirectedValue around(Real v);
  // Exactly representable point (no padding), e.g. a published constant.
  static DirectedValue exact(Real v);
  static DirectedValue from_reals(Real lower, Real upper);

  const LogScalar& lower() const { return lower_; }
  const LogScalar& upper() const { return upper_; }
  LogScalar width() const;
  bool contains(const LogScalar& v) const { return lower_ <= v && v <= upper_; }
  bool contains(const DirectedValue& o) const {
    return lower_ <= o.lower_ && o.upper_ <= upper_;
  }

  DirectedValue operator-() const { return {-upper_, -lower_}; }

  friend DirectedValue operator+(const DirectedValue& a, const DirectedValue& b);
  friend DirectedValue operator-(const DirectedValue& a, const DirectedValue& b);
  friend DirectedValue operator*(const DirectedValue& a, const DirectedValue& b);
  // Throws DomainError if b contains zero.
  friend DirectedValue operator/(const DirectedValue& a, const DirectedValue& b);

  DirectedValue& operator+=(const DirectedValue& o) { return *this = *this + o; }

 private:
  LogScalar lower_;
  LogScalar upper_;
};

// Elementary functions on enclosures. exp takes a moderate exponent; log and
// sqrt require a nonnegative operand; pow requires lower >= 0.
DirectedValue exp(const DirectedValue& x);
DirectedValue log(const DirectedValue& x);
DirectedValue sqrt(const DirectedValue& x);
DirectedValue pow(const DirectedValue& x, Real p);

std::string to_string(const DirectedValue& v, int digits = 6);

}  // namespace pnt
