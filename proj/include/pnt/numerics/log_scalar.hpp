#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>

#include "pnt/numerics/real.hpp"

namespace pnt {

enum class Sign : std::int8_t { negative = -1, zero = 0, positive = 1 };

inline Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

/// Signed real stored as the natural logarithm of its magnitude.
///
/// This is the only representation allowed for quantities whose natural log
/// exceeds 700 in magnitude (e^3914, 10^-1675, ...): to_real() refuses to
/// convert them.
class LogScalar {
 public:
  /// Magnitudes beyond this in log-space are never legitimate and indicate a
  /// runaway computation.
  static constexpr Real kMaxLogMag = 1e300L;
  /// Largest |log_mag| that may be converted to a plain Real.
  static constexpr Real kRealLogLimit = 700;

  constexpr LogScalar() = default;

  static LogScalar zero() { return {}; }
  static LogScalar from_real(Real v);
  static LogScalar from_log(Real log_mag, Sign sign = Sign::positive);

  Sign sign() const { return sign_; }
  bool is_zero() const { return sign_ == Sign::zero; }
  bool is_positive() const { return sign_ == Sign::positive; }
  bool is_negative() const { return sign_ == Sign::negative; }

  // Natural log of |value|. Throws DomainError on zero.
  Real log_mag() const;
  Real log10_mag() const;

  // Throws RangeError when |log_mag| > kRealLogLimit.
  Real to_real() const;

  LogScalar abs() const;
  LogScalar operator-() const;

  friend LogScalar operator*(const LogScalar& a, const LogScalar& b);
  friend LogScalar operator/(const LogScalar& a, const LogScalar& b);
  friend LogScalar operator+(const LogScalar& a, const LogScalar& b);
  friend LogScalar operator-(const LogScalar& a, const LogScalar& b);

  friend std::strong_ordering operator<=>(const LogScalar& a, const LogScalar& b);
  friend bool operator==(const LogScalar& a, const LogScalar& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  LogScalar(Sign sign, Real log_mag) : sign_(sign), log_mag_(log_mag) {}

  Sign sign_ = Sign::zero;
  Real log_mag_ = 0;
};

// |x|^p for x >= 0. Zero to a positive power is zero.
LogScalar pow(const LogScalar& x, Real p);

// e^x for a plain exponent.
inline LogScalar exp_scalar(Real x) { return LogScalar::from_log(x); }

// Decimal rendering with `digits` significant figures, e.g. "6.78e-29" or
// "1.35e-1675". Works far outside the range of Real.
std::string to_string(const LogScalar& v, int digits = 6);

struct Term {
  Real coefficient;
  LogScalar value;
};

struct Combined {
  LogScalar value;
  // Sum of |coefficient * value|; bounds the absolute rounding error.
  LogScalar magnitude;
  // Set when the result is below 1e-10 of `magnitude` but nonzero.
  bool lost_precision = false;
};

// Signed sum of coefficient * value by log-sum-exp. Terms are reduced in a
// canonical order (descending magnitude, negatives first) so the result does
// not depend on the input order.
Combined ls_combine(std::span<const Term> terms);

}  // namespace pnt
