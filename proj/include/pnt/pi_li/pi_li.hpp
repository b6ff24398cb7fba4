#pragma once

#include <string>
#include <vector>

#include "pnt/numerics/directed.hpp"
#include "pnt/pintz/pintz.hpp"
#include "pnt/primes/sieve.hpp"
#include "pnt/zeta/region.hpp"

namespace pnt::pi_li {

using zeta::ZeroFreeRegion;

// Error term  A1 (log x / R)^B exp(-C sqrt(log x / R))  for |theta(x) - x| / x,
// transferred to pi(x) - li(x) from log x >= x0_log with the auxiliary
// exponent alpha.
struct PiLiParams {
  Real x0_log = 2000;
  Real alpha = 0.47L;
  Real A1 = 411.5L;
  Real B = 1.52L;
  Real C = 1.89L;

  static PiLiParams from_row(const pintz::PintzRow& row, Real x0_log, Real alpha);
  // Throws DomainError unless 1 - B < alpha < 2 - B and x0_log >= 2000.
  void validate() const;
};

// Split point below which the theta deficit is integrated exactly.
inline constexpr Real kExactRangeEnd = 563;
// |theta(x) - x| <= x / (2 log x) for x >= 563.
inline constexpr Real kMidRangeFactor = 0.5L;
// |theta(x) - x| <= 1.2e-5 x for log x >= 1000.
inline constexpr Real kUpperRangeEps = 1.2e-5L;
inline constexpr Real kUpperRangeStartLog = 1000;
inline constexpr Real kTailStartLog = 2000;
// Published allowance for the exact range plus the 2/log 2 boundary term.
inline constexpr Real kExactRangeAllowance = 7.6L;

// L - L^(B - 1 + alpha) - (C/2) sqrt(L/R) - alpha. Positive values (with
// the margin increasing from there on) make h(t) = t exp(-C sqrt(log t / R))
// / log^alpha t dominate the tail integrand.
Real kitchen_margin(Real L, Real B, Real C, Real alpha, const ZeroFreeRegion& region = {});
// d/dL of the margin.
Real kitchen_margin_slope(Real L, Real B, Real C, Real alpha, const ZeroFreeRegion& region = {});

// Enclosure of int_2^563 |theta(t) - t| / (t log^2 t) dt plus 2/log 2,
// and its upward rounding to two decimals. Requires a sieve to 563.
struct ExactRangeCertificate {
  DirectedValue integral;
  DirectedValue with_boundary;
  Real i1_plus;
  bool within_allowance;
};
ExactRangeCertificate exact_range_term(const primes::SieveTables& tables);

struct DeltaBreakdown {
  DirectedValue first;       // x0_log^(1 - B - alpha)
  DirectedValue scale;       // R^B exp(C sqrt(x0_log / R)) x0_log^(1 - B) / (A1 x0)
  DirectedValue mid_range;   // (1/2) int_563^e^1000 dt / log^3 t
  DirectedValue upper_range; // 1.2e-5 int_e^1000^e^2000 dt / log^2 t
  DirectedValue delta;
};

// Relative size of everything but the tail in the pi - li bound. Throws
// CertificationError when the kitchen margin at x0_log is not positive and
// increasing.
DeltaBreakdown delta_bound(const PiLiParams& params, Real i1_plus, const ZeroFreeRegion& region = {});

struct CorollaryTargets {
  Real coefficient = 235;
  Real log_power = 0.52L;
  Real exp_coefficient = 0.8L;
};

struct CorollaryConstants {
  DirectedValue coefficient;  // A1 (1 + delta) / R^B
  Real log_power;             // B - 1
  Real exp_coefficient;       // C / sqrt(R), rounded down
  Real exp_ceiling;           // 2 / sqrt(R)
  bool certified;
  std::vector<std::string> failures;
};

CorollaryConstants corollary_constants(const PiLiParams& params, const DirectedValue& delta,
                                       const ZeroFreeRegion& region = {}, const CorollaryTargets& targets = {});

// One step of an epsilon0 schedule: the bound holds for log x >= threshold_log.
struct ScheduleEntry {
  Real threshold_log;
  LogScalar eps0;
  std::string source;
};

// Table-row thresholds 1000, 2000, ... with their published epsilon0.
std::vector<ScheduleEntry> published_schedule();
// epsilon0 recomputed at lo, lo + step, ..., hi from the density table,
// rounded up to 3 significant figures.
std::vector<ScheduleEntry> computed_schedule(Real lo, Real hi, Real step, const zeta::ZeroDensityTable& table,
                                             const ZeroFreeRegion& region = {});

// Upper bound for |pi(x) - li(x)| at log x = x_log from a schedule that
// starts at 1000 and is strictly ascending:
//   x eps0(x) / log x + 2/log 2 + int_2^563 |theta - t| / (t log^2 t)
//   + (1/2) int_563^e^1000 dt / log^3 t + sum_i eps0_i int_segment_i dt / log^2 t.
LogScalar e_upper(Real x_log, const std::vector<ScheduleEntry>& schedule, const primes::SieveTables& tables);
// Same, reusing a certificate from exact_range_term.
LogScalar e_upper(Real x_log, const std::vector<ScheduleEntry>& schedule, const ExactRangeCertificate& exact_range);

struct PairCheck {
  Real x0_log;
  Real x1_log;
  LogScalar e_x1;
  LogScalar target;  // 1.001 * coefficient * x0 * log^p x0 * exp(-c sqrt(log x0))
  bool pass;
};

// Checks E(x1) <= 1.001 * RHS(x0) for x0 = e^k, x1 = e^(k + step), k on
// [lo, hi) in increments of step.
std::vector<PairCheck> pair_check(Real lo, Real hi, Real step, const std::vector<ScheduleEntry>& schedule,
                                  const primes::SieveTables& tables, const CorollaryTargets& rhs = {});

// (sqrt x / log x)(1.95 + 3.9 / log x + 19.5 / log^2 x), a bound for
// |pi(x) - li(x)| when 2 < x <= 1e19.
Real small_x_bound(Real x);

// li(x) = int_2^x dt / log t enclosed by adaptive quadrature. Requires x >= 2.
DirectedValue li_enclosure(Real x, Real tol = 1e-6L);
// li at each of the ascending points, accumulated piece by piece.
std::vector<DirectedValue> li_on_grid(const std::vector<Real>& points, Real tol_per_piece = 1e-7L);

}  // namespace pnt::pi_li
