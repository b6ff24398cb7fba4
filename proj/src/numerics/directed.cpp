#include "pnt/numerics/directed.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "pnt/error.hpp"

namespace pnt {

namespace {

// Outward padding in log-space. glibc's long double exp/log are accurate to
// well under 8 ulp.
constexpr Real kPadUlps = 8;

Real pad_for(Real log_mag) { return kPadUlps * kRealEpsilon * std::max<Real>(1, std::fabs(log_mag)); }

Real real_down(Real v) { return v - kPadUlps * kRealEpsilon * std::fabs(v); }
Real real_up(Real v) { return v + kPadUlps * kRealEpsilon * std::fabs(v); }

}  // namespace

LogScalar round_up(const LogScalar& v) {
  if (v.is_zero()) return v;
  const Real l = v.log_mag();
  return LogScalar::from_log(v.is_positive() ? l + pad_for(l) : l - pad_for(l), v.sign());
}

LogScalar round_down(const LogScalar& v) {
  if (v.is_zero()) return v;
  const Real l = v.log_mag();
  return LogScalar::from_log(v.is_positive() ? l - pad_for(l) : l + pad_for(l), v.sign());
}

namespace {

LogScalar slack_of(const Combined& c) {
  if (c.magnitude.is_zero()) return {};
  return LogScalar::from_log(c.magnitude.log_mag() + std::log(16 * kRealEpsilon));
}

}  // namespace

LogScalar combined_upper(const Combined& c) {
  const LogScalar slack = slack_of(c);
  if (slack.is_zero()) return c.value;
  const Term t[] = {{1, c.value}, {1, slack}};
  return round_up(ls_combine(t).value);
}

LogScalar combined_lower(const Combined& c) {
  const LogScalar slack = slack_of(c);
  if (slack.is_zero()) return c.value;
  const Term t[] = {{1, c.value}, {-1, slack}};
  return round_down(ls_combine(t).value);
}

DirectedValue::DirectedValue(LogScalar lower, LogScalar upper) : lower_(lower), upper_(upper) {
  if (upper_ < lower_) {
    throw DomainError("DirectedValue: lower " + to_string(lower_) + " exceeds upper " + to_string(upper_));
  }
}

DirectedValue DirectedValue::around(const LogScalar& v) { return {round_down(v), round_up(v)}; }

DirectedValue DirectedValue::around(Real v) { return around(LogScalar::from_real(v)); }

DirectedValue DirectedValue::exact(Real v) {
  const auto s = LogScalar::from_real(v);
  return {s, s};
}

DirectedValue DirectedValue::from_reals(Real lower, Real upper) {
  return {round_down(LogScalar::from_real(lower)), round_up(LogScalar::from_real(upper))};
}

LogScalar DirectedValue::width() const {
  const Term t[] = {{1, upper_}, {-1, lower_}};
  return combined_upper(ls_combine(t));
}

DirectedValue operator+(const DirectedValue& a, const DirectedValue& b) {
  const Term lo[] = {{1, a.lower_}, {1, b.lower_}};
  const Term hi[] = {{1, a.upper_}, {1, b.upper_}};
  return {combined_lower(ls_combine(lo)), combined_upper(ls_combine(hi))};
}

DirectedValue operator-(const DirectedValue& a, const DirectedValue& b) { return a + (-b); }

DirectedValue operator*(const DirectedValue& a, const DirectedValue& b) {
  const std::array<LogScalar, 4> p = {a.lower_ * b.lower_, a.lower_ * b.upper_, a.upper_ * b.lower_,
                                      a.upper_ * b.upper_};
  LogScalar lo = round_down(p[0]);
  LogScalar hi = round_up(p[0]);
  for (std::size_t i = 1; i < p.size(); ++i) {
    lo = std::min(lo, round_down(p[i]));
    hi = std::max(hi, round_up(p[i]));
  }
  return {lo, hi};
}

DirectedValue operator/(const DirectedValue& a, const DirectedValue& b) {
  if (b.contains(LogScalar::zero())) throw DomainError("DirectedValue: divisor interval contains zero");
  const LogScalar one = LogScalar::from_real(1);
  const DirectedValue recip{round_down(one / b.upper_), round_up(one / b.lower_)};
  return a * recip;
}

DirectedValue exp(const DirectedValue& x) {
  const Real lo = real_down(x.lower().to_real());
  const Real hi = real_up(x.upper().to_real());
  return {round_down(LogScalar::from_log(lo)), round_up(LogScalar::from_log(hi))};
}

DirectedValue log(const DirectedValue& x) {
  if (!x.lower().is_positive()) throw DomainError("log: enclosure not strictly positive");
  return {round_down(LogScalar::from_real(x.lower().log_mag())),
          round_up(LogScalar::from_real(x.upper().log_mag()))};
}

DirectedValue pow(const DirectedValue& x, Real p) {
  if (x.lower().is_negative()) throw DomainError("pow: enclosure has negative part");
  if (p < 0 && x.lower().is_zero()) throw DomainError("pow: negative power of an enclosure touching zero");
  if (p >= 0) return {round_down(pow(x.lower(), p)), round_up(pow(x.upper(), p))};
  return {round_down(pow(x.upper(), p)), round_up(pow(x.lower(), p))};
}

DirectedValue sqrt(const DirectedValue& x) { return pow(x, 0.5L); }

std::string to_string(const DirectedValue& v, int digits) {
  return "[" + to_string(v.lower(), digits) + ", " + to_string(v.upper(), digits) + "]";
}

}  // namespace pnt
