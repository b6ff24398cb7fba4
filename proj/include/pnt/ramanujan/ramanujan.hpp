#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pnt/numerics/directed.hpp"
#include "pnt/primes/sieve.hpp"

namespace pnt::ramanujan {

// One piece of the envelope a(x) with |theta(x) - x| log^5 x <= x a(x), in
// log coordinates L = log x:
//   a = coef * L^p * exp(-c sqrt(L / r) - d L).
struct Branch {
  Real lower_log;
  Real upper_log;
  bool lower_closed;
  bool upper_closed;
  Real coef;
  Real p;
  Real c = 0;
  Real r = 1;
  Real d = 0;
  std::string label;

  bool contains(Real L) const;
  Real log_a(Real L) const;
};

class PiecewiseEnvelope {
 public:
  // Throws DomainError unless branches are contiguous from log 2 upwards,
  // the last is unbounded, and each has a positive coefficient.
  PiecewiseEnvelope(std::vector<Branch> branches, std::string description);

  const std::vector<Branch>& branches() const { return branches_; }
  const std::string& description() const { return description_; }
  const Branch& branch_at(Real L) const;

  // Enclosure of a over [lo, hi] (log coordinates) across all branches
  // touched. Each branch formula is log-concave in sqrt(L), so its maximum
  // is at an endpoint or the interior critical point.
  std::pair<LogScalar, LogScalar> range(Real lo, Real hi) const;

 private:
  std::vector<Branch> branches_;
  std::string description_;
};

// The standard envelope: trivial bounds to 599 ((3 - log 2) / 3 below 3,
// (2 - log 2) / 2 from there), sqrt(x) log^2 x / (8 pi)
// to e^58, the 6.455 zero-free-region bound to e^1169, and the A1 rows
// 462.0 / 411.5 / 379.7 with B = 1.52, C = 1.89, R = 5.573412 beyond.
// `scale` multiplies every branch (for sensitivity checks).
PiecewiseEnvelope standard_envelope(Real scale = 1);

struct EnvelopeValue {
  LogScalar ratio;  // a(x) / log^5 x
  LogScalar a;
};

// Requires x_log > log 2.
EnvelopeValue a_envelope(Real x_log, const PiecewiseEnvelope& env);

// a non-increasing from xa_log on: the last branch must already cover
// xa_log, its log-derivative must be negative there, and a 1000-point grid on
// [xa_log, 100 xa_log] must be non-increasing.
bool a_non_increasing_from(Real xa_log, const PiecewiseEnvelope& env);

// Integrals of (720 +- a(t)) / log^7 t over [2, x_a], scaled by log^6 x_a / x_a.
struct RamanujanConstants {
  Real xa_log;
  DirectedValue K1;  // with 720 + a
  DirectedValue K2;  // with 720 - a
  LogScalar K3;      // 2 (log^6 x_a / x_a) sum_{k=1..5} k! / log^(k+1) 2
  // Part of K1 from t <= e^(xa_log - 50); bounded, not dropped.
  LogScalar far_slack;
  LogScalar a_at_xa;
};

inline constexpr Real kNearWindow = 50;
inline constexpr Real kFarSlackLimit = 1e-20L;

// Requires xa_log >= 3000 and a non-increasing from there; throws
// CertificationError otherwise.
RamanujanConstants ram_constants(Real xa_log, const PiecewiseEnvelope& env);

// 1/log x_a + 7 * 2^8 / log^2 x_a + 7 log^6 x_a / (sqrt(x_a) log^8 2).
DirectedValue envelope_bracket(Real xa_log);

struct Envelopes {
  DirectedValue Ma;
  DirectedValue ma;
};

// Requires x_log >= xa_log.
Envelopes envelopes(Real x_log, const RamanujanConstants& k, const PiecewiseEnvelope& env);

struct EpsilonPair {
  DirectedValue epsM;
  DirectedValue epsm;
};

// Both polynomials in 1/log x. Requires x_log > 1.
EpsilonPair epsilon_pair(Real x_log, const DirectedValue& Ma, const DirectedValue& ma);

struct Sufficiency {
  Real xa_log;
  Real x_log;
  RamanujanConstants constants;
  Envelopes env;
  EpsilonPair eps;
  // Lower bound of log x - (epsM - epsm).
  Real margin;
  bool pass;
};

// The inequality holds for all x >= e^x_log when margin > 0. Requires
// x_log > xa_log.
Sufficiency sufficiency_check(Real xa_log, Real x_log, const PiecewiseEnvelope& env);

struct ScanPoint {
  long L;
  Real margin;
};

struct ScanResult {
  std::optional<long> first_pass;
  std::vector<ScanPoint> curve;
};

// Smallest L in [lo, hi] with sufficiency_check(L - 1, L) passing; scans
// upward and stops at the first pass. lo == hi yields no result.
ScanResult threshold_scan(const PiecewiseEnvelope& env, long lo, long hi);

enum class Verdict { holds, fails, indeterminate };
std::string to_string(Verdict v);

struct SpotCheck {
  std::uint64_t x;
  std::uint64_t x_over_e;  // floor(x / e)
  std::uint64_t pi_x;
  std::uint64_t pi_x_over_e;
  Verdict verdict;
  // Decimal digits of the arithmetic that decided the comparison.
  int digits;
};

// Decides pi(x)^2 < (e x / log x) pi(x / e) exactly from sieve counts,
// escalating arithmetic precision until the comparison is decided.
// Requires x / e >= 2 and x within the sieve.
SpotCheck inequality_spot_check(std::uint64_t x, const primes::SieveTables& tables);

// Same without a resident sieve: both counts come from one streaming pass.
SpotCheck inequality_spot_check_streaming(std::uint64_t x,
                                          const std::function<void(std::uint64_t)>& progress = {});

}  // namespace pnt::ramanujan
