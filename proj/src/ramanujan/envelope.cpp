#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pnt/error.hpp"
#include "pnt/ramanujan/ramanujan.hpp"

namespace pnt::ramanujan {

namespace {

constexpr Real kInf = std::numeric_limits<Real>::infinity();
// Zero-free region constants: the sharp one and the older, wider one.
constexpr Real kRegionR = 5.573412L;
constexpr Real kWideRegionR = 6.455L;

}  // namespace

bool Branch::contains(Real L) const {
  const bool above = lower_closed ? L >= lower_log : L > lower_log;
  const bool below = upper_closed ? L <= upper_log : L < upper_log;
  return above && below;
}

Real Branch::log_a(Real L) const { return std::log(coef) + p * std::log(L) - c * std::sqrt(L / r) - d * L; }

PiecewiseEnvelope::PiecewiseEnvelope(std::vector<Branch> branches, std::string description)
    : branches_(std::move(branches)), description_(std::move(description)) {
  if (branches_.empty()) throw DomainError("envelope: no branches");
  if (std::fabs(branches_.front().lower_log - std::numbers::ln2_v<Real>) > 1e-15L ||
      branches_.front().lower_closed) {
    throw DomainError("envelope: first branch must start just above log 2");
  }
  for (std::size_t i = 0; i < branches_.size(); ++i) {
    const auto& b = branches_[i];
    if (!(b.coef > 0) || !(b.lower_log < b.upper_log) || !(b.r > 0) || b.c < 0 || b.d < 0) {
      throw DomainError("envelope: invalid branch " + b.label);
    }
    if (i > 0) {
      const auto& prev = branches_[i - 1];
      if (prev.upper_log != b.lower_log || prev.upper_closed == b.lower_closed) {
        throw DomainError("envelope: branches " + prev.label + " and " + b.label + " are not contiguous");
      }
    }
  }
  if (branches_.back().upper_log != kInf) throw DomainError("envelope: last branch must be unbounded");
}

const Branch& PiecewiseEnvelope::branch_at(Real L) const {
  for (const auto& b : branches_) {
    if (b.contains(L)) return b;
  }
  throw DomainError("envelope: log x = " + std::to_string(static_cast<double>(L)) + " not above log 2");
}

std::pair<LogScalar, LogScalar> PiecewiseEnvelope::range(Real lo, Real hi) const {
  if (!(lo <= hi)) throw DomainError("envelope range: lo > hi");
  Real min_log = kInf, max_log = -kInf;
  for (const auto& b : branches_) {
    const Real a = std::max(lo, b.lower_log);
    const Real z = std::min(hi, b.upper_log);
    if (a > z || (a == z && !b.contains(a))) continue;
    // Closure of the branch on [a, z]: at an excluded endpoint the formula's
    // limit still bounds the inf and sup from the right side.
    const Real la = b.log_a(a), lz = b.log_a(z);
    Real top = std::max(la, lz);
    // Critical point of p log L - c sqrt(L/r) - d L in s = sqrt(L).
    Real s_star = 0;
    if (b.d > 0) {
      const Real q = b.c / (2 * std::sqrt(b.r));
      s_star = (-q + std::sqrt(q * q + 4 * b.d * b.p)) / (2 * b.d);
    } else if (b.c > 0) {
      s_star = 2 * b.p * std::sqrt(b.r) / b.c;
    }
    const Real L_star = s_star * s_star;
    if (s_star > 0 && L_star > a && L_star < z) top = std::max(top, b.log_a(L_star));
    min_log = std::min(min_log, std::min(la, lz));
    max_log = std::max(max_log, top);
  }
  if (min_log == kInf) throw DomainError("envelope range: interval below log 2");
  // Pad for rounding in log/sqrt.
  const Real pad_lo = 16 * kRealEpsilon * std::max<Real>(1, std::fabs(min_log) + lo);
  const Real pad_hi = 16 * kRealEpsilon * std::max<Real>(1, std::fabs(max_log) + hi);
  return {LogScalar::from_log(min_log - pad_lo), LogScalar::from_log(max_log + pad_hi)};
}

PiecewiseEnvelope standard_envelope(Real scale) {
  if (!(scale > 0)) throw DomainError("standard_envelope: scale must be positive");
  const Real pi = std::numbers::pi_v<Real>;
  const Real pintz_p = 5 + 1.52L;
  auto pintz = [&](Real A1, Real lo, Real hi, const char* label) {
    return Branch{lo, hi, true, false, scale * A1 * std::pow(kRegionR, -1.52L), pintz_p, 1.89L, kRegionR, 0, label};
  };
  std::vector<Branch> b = {
      // On (2, 3), theta = log 2 and |theta - x| / x climbs to (3 - log 2) / 3,
      // above the printed (2 - log 2) / 2; that value only holds from 3 on.
      {std::numbers::ln2_v<Real>, std::log(Real{3}), false, false, scale * (3 - std::numbers::ln2_v<Real>) / 3, 5, 0, 1,
       0, "trivial below 3"},
      {std::log(Real{3}), std::log(Real{599}), true, true, scale * (2 - std::numbers::ln2_v<Real>) / 2, 5, 0, 1, 0,
       "trivial"},
      {std::log(Real{599}), 58, false, true, scale / (8 * pi), 7, 0, 1, 0.5L, "sqrt(x) log^2 x / (8 pi)"},
      {58, 1169, false, false, scale * std::sqrt(8 / (17 * pi)) * std::pow(kWideRegionR, -0.25L), 5.25L, 1, kWideRegionR,
       0, "zero-free region R = 6.455"},
      pintz(462.0L, 1169, 2000, "A1 = 462.0"),
      pintz(411.5L, 2000, 3000, "A1 = 411.5"),
      pintz(379.7L, 3000, kInf, "A1 = 379.7"),
  };
  std::string desc = "standard envelope";
  if (scale != 1) desc += " scaled by " + std::to_string(static_cast<double>(scale));
  return PiecewiseEnvelope(std::move(b), desc);
}

EnvelopeValue a_envelope(Real x_log, const PiecewiseEnvelope& env) {
  if (!(x_log > std::numbers::ln2_v<Real>)) throw DomainError("a_envelope: need log x > log 2");
  const Real la = env.branch_at(x_log).log_a(x_log);
  return {LogScalar::from_log(la - 5 * std::log(x_log)), LogScalar::from_log(la)};
}

bool a_non_increasing_from(Real xa_log, const PiecewiseEnvelope& env) {
  const auto& b = env.branch_at(xa_log);
  if (&b != &env.branches().back()) return false;
  // d/dL log a = (p - (c/2) sqrt(L/r)) / L - d; the bracket only decreases.
  if (!(b.p - (b.c / 2) * std::sqrt(xa_log / b.r) - b.d * xa_log < 0)) return false;
  constexpr int kGrid = 1000;
  Real prev = b.log_a(xa_log);
  for (int i = 1; i < kGrid; ++i) {
    const Real L = xa_log * std::pow(Real{100}, static_cast<Real>(i) / (kGrid - 1));
    const Real cur = env.branch_at(L).log_a(L);
    if (cur > prev) return false;
    prev = cur;
  }
  return true;
}

}  // namespace pnt::ramanujan
