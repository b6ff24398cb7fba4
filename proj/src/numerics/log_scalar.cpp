#include "pnt/numerics/log_scalar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "pnt/error.hpp"

namespace pnt {

namespace {

void check_log_range(Real log_mag) {
  if (!std::isfinite(log_mag)) throw DomainError("LogScalar: non-finite log-magnitude");
  if (std::fabs(log_mag) > LogScalar::kMaxLogMag) {
    throw RangeError("LogScalar: log-magnitude beyond +-1e300");
  }
}

}  // namespace

LogScalar LogScalar::from_real(Real v) {
  if (!std::isfinite(v)) throw DomainError("LogScalar::from_real: non-finite value");
  if (v == 0) return {};
  return {v > 0 ? Sign::positive : Sign::negative, std::log(std::fabs(v))};
}

LogScalar LogScalar::from_log(Real log_mag, Sign sign) {
  if (sign == Sign::zero) return {};
  check_log_range(log_mag);
  return {sign, log_mag};
}

Real LogScalar::log_mag() const {
  if (is_zero()) throw DomainError("LogScalar: log-magnitude of zero");
  return log_mag_;
}

Real LogScalar::log10_mag() const { return log_mag() / std::log(Real{10}); }

Real LogScalar::to_real() const {
  if (is_zero()) return 0;
  if (std::fabs(log_mag_) > kRealLogLimit) {
    throw RangeError("LogScalar::to_real: |log-magnitude| " + std::to_string(static_cast<double>(log_mag_)) +
                     " exceeds 700; keep this quantity in log form");
  }
  const Real m = std::exp(log_mag_);
  return sign_ == Sign::negative ? -m : m;
}

LogScalar LogScalar::abs() const {
  return is_zero() ? LogScalar{} : LogScalar{Sign::positive, log_mag_};
}

LogScalar LogScalar::operator-() const { return {sign_ * Sign::negative, log_mag_}; }

LogScalar operator*(const LogScalar& a, const LogScalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return LogScalar::from_log(a.log_mag_ + b.log_mag_, a.sign_ * b.sign_);
}

LogScalar operator/(const LogScalar& a, const LogScalar& b) {
  if (b.is_zero()) throw DomainError("LogScalar: division by zero");
  if (a.is_zero()) return {};
  return LogScalar::from_log(a.log_mag_ - b.log_mag_, a.sign_ * b.sign_);
}

LogScalar operator+(const LogScalar& a, const LogScalar& b) {
  const Term terms[] = {{1, a}, {1, b}};
  return ls_combine(terms).value;
}

LogScalar operator-(const LogScalar& a, const LogScalar& b) {
  const Term terms[] = {{1, a}, {-1, b}};
  return ls_combine(terms).value;
}

std::strong_ordering operator<=>(const LogScalar& a, const LogScalar& b) {
  const int sa = static_cast<int>(a.sign_);
  const int sb = static_cast<int>(b.sign_);
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  // Same nonzero sign: larger magnitude is larger iff positive.
  const auto by_mag = a.log_mag_ < b.log_mag_   ? std::strong_ordering::less
                      : a.log_mag_ > b.log_mag_ ? std::strong_ordering::greater
                                                : std::strong_ordering::equal;
  if (sa > 0) return by_mag;
  return 0 <=> by_mag;
}

LogScalar pow(const LogScalar& x, Real p) {
  if (x.is_negative()) throw DomainError("pow: negative base");
  if (x.is_zero()) {
    if (p > 0) return {};
    throw DomainError("pow: zero to a nonpositive power");
  }
  if (p == 0) return LogScalar::from_real(1);
  return LogScalar::from_log(p * x.log_mag());
}

std::string to_string(const LogScalar& v, int digits) {
  if (v.is_zero()) return "0";
  digits = std::clamp(digits, 1, 18);
  const Real l10 = v.log10_mag();
  Real exponent = std::floor(l10);
  Real mantissa = std::pow(Real{10}, l10 - exponent);
  // Rounding the mantissa may carry into the next decade.
  const Real scale = std::pow(Real{10}, digits - 1);
  if (std::round(mantissa * scale) >= 10 * scale) {
    mantissa /= 10;
    exponent += 1;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%.*Lfe%+.0Lf", v.is_negative() ? "-" : "", digits - 1, mantissa,
                exponent);
  return buf;
}

Combined ls_combine(std::span<const Term> terms) {
  if (terms.empty()) throw DomainError("ls_combine: empty term list");

  struct Part {
    Real log_mag;
    int sign;
  };
  std::vector<Part> parts;
  parts.reserve(terms.size());
  for (const auto& t : terms) {
    if (!std::isfinite(t.coefficient)) throw DomainError("ls_combine: non-finite coefficient");
    if (t.coefficient == 0 || t.value.is_zero()) continue;
    const int s = (t.coefficient > 0 ? 1 : -1) * static_cast<int>(t.value.sign());
    parts.push_back({std::log(std::fabs(t.coefficient)) + t.value.log_mag(), s});
  }
  if (parts.empty()) return {};

  std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    if (a.log_mag != b.log_mag) return a.log_mag > b.log_mag;
    return a.sign < b.sign;
  });

  const Real top = parts.front().log_mag;
  // Neumaier summation of scaled terms.
  Real sum = 0, comp = 0, abs_sum = 0;
  for (const auto& p : parts) {
    const Real x = p.sign * std::exp(p.log_mag - top);
    const Real t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
    abs_sum += std::fabs(x);
  }
  sum += comp;

  Combined out;
  out.magnitude = LogScalar::from_log(top + std::log(abs_sum));
  if (sum == 0) return out;
  out.value = LogScalar::from_log(top + std::log(std::fabs(sum)), sum > 0 ? Sign::positive : Sign::negative);
  out.lost_precision = std::fabs(sum) < 1e-10L * abs_sum;
  return out;
}

}  // namespace pnt
