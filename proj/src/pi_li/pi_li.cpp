#include "pnt/pi_li/pi_li.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pnt/error.hpp"
#include "pnt/numerics/integrals.hpp"
#include "pnt/numerics/quadrature.hpp"
#include "pnt/primes/theta_deficit.hpp"

namespace pnt::pi_li {

namespace {

DirectedValue around_log(Real log_mag) { return DirectedValue::around(LogScalar::from_log(log_mag)); }

const DirectedValue& mid_range_term() {
  static const DirectedValue v = DirectedValue::exact(kMidRangeFactor) *
                                 inv_log_power_enclosure(std::log(kExactRangeEnd), kUpperRangeStartLog, 3);
  return v;
}

std::string num(Real v) { return std::to_string(static_cast<double>(v)); }

}  // namespace

PiLiParams PiLiParams::from_row(const pintz::PintzRow& row, Real x0_log, Real alpha) {
  return {x0_log, alpha, pintz::theta_variant(row), row.B, row.C};
}

void PiLiParams::validate() const {
  if (!(1 - B < alpha && alpha < 2 - B)) {
    throw DomainError("alpha = " + num(alpha) + " must satisfy 1 - B < alpha < 2 - B with B = " + num(B));
  }
  if (!(x0_log >= kTailStartLog)) throw DomainError("x0_log must be at least 2000");
  if (!(A1 > 0) || !(C > 0)) throw DomainError("A1 and C must be positive");
}

Real kitchen_margin(Real L, Real B, Real C, Real alpha, const ZeroFreeRegion& region) {
  region.validate();
  if (!(L >= 1)) throw DomainError("kitchen_margin: need L >= 1");
  return L - std::pow(L, B - 1 + alpha) - (C / 2) * std::sqrt(L / region.R) - alpha;
}

Real kitchen_margin_slope(Real L, Real B, Real C, Real alpha, const ZeroFreeRegion& region) {
  region.validate();
  const Real p = B - 1 + alpha;
  return 1 - p * std::pow(L, p - 1) - (C / 4) / std::sqrt(L * region.R);
}

ExactRangeCertificate exact_range_term(const primes::SieveTables& tables) {
  const auto integral = primes::theta_deficit_abs_integral(tables, 2, kExactRangeEnd);
  const auto with_boundary = integral + DirectedValue::around(2 / std::numbers::ln2_v<Real>);
  const Real i1_plus = pintz::round_up_decimals(with_boundary.upper().to_real(), 2);
  return {integral, with_boundary, i1_plus, i1_plus <= kExactRangeAllowance};
}

DeltaBreakdown delta_bound(const PiLiParams& p, Real i1_plus, const ZeroFreeRegion& region) {
  p.validate();
  region.validate();
  const Real margin = kitchen_margin(p.x0_log, p.B, p.C, p.alpha, region);
  const Real slope = kitchen_margin_slope(p.x0_log, p.B, p.C, p.alpha, region);
  if (!(margin > 0 && slope > 0)) {
    throw CertificationError("kitchen condition fails at log x0 = " + num(p.x0_log) + " (margin " + num(margin) +
                             ", slope " + num(slope) + "); refusing to produce Delta");
  }
  const Real L0 = p.x0_log;
  DeltaBreakdown d{};
  d.first = around_log((1 - p.B - p.alpha) * std::log(L0));
  d.scale = around_log(p.B * std::log(region.R) + p.C * std::sqrt(L0 / region.R) + (1 - p.B) * std::log(L0) -
                       std::log(p.A1) - L0);
  d.mid_range = mid_range_term();
  d.upper_range = DirectedValue::around(kUpperRangeEps) *
                  inv_log_power_enclosure(kUpperRangeStartLog, kTailStartLog, 2);
  d.delta = d.first + d.scale * (DirectedValue::around(i1_plus) + d.mid_range + d.upper_range);
  return d;
}

CorollaryConstants corollary_constants(const PiLiParams& p, const DirectedValue& delta, const ZeroFreeRegion& region,
                                       const CorollaryTargets& targets) {
  p.validate();
  region.validate();
  CorollaryConstants c{};
  c.coefficient = DirectedValue::around(p.A1) * (DirectedValue::exact(1) + delta) /
                  pow(DirectedValue::around(region.R), p.B);
  c.log_power = p.B - 1;
  c.exp_coefficient = pintz::round_down_decimals(p.C / std::sqrt(region.R), 6);
  c.exp_ceiling = 2 / std::sqrt(region.R);
  const Real coef_up = c.coefficient.upper().to_real();
  if (!(coef_up <= targets.coefficient)) {
    c.failures.push_back("coefficient " + num(coef_up) + " exceeds " + num(targets.coefficient));
  }
  if (std::fabs(c.log_power - targets.log_power) > 1e-12L) {
    c.failures.push_back("log power " + num(c.log_power) + " differs from " + num(targets.log_power));
  }
  if (!(c.exp_coefficient >= targets.exp_coefficient)) {
    c.failures.push_back("exponent coefficient " + num(c.exp_coefficient) + " below " + num(targets.exp_coefficient));
  }
  if (!(c.exp_coefficient <= c.exp_ceiling)) c.failures.push_back("exponent coefficient above 2 / sqrt(R)");
  c.certified = c.failures.empty();
  return c;
}

std::vector<ScheduleEntry> published_schedule() {
  std::vector<ScheduleEntry> out;
  for (const auto& row : pintz::reference_table()) {
    out.push_back({row.X, row.eps0.value(), "published table, X = " + std::to_string(static_cast<int>(row.X))});
  }
  return out;
}

std::vector<ScheduleEntry> computed_schedule(Real lo, Real hi, Real step, const zeta::ZeroDensityTable& table,
                                             const ZeroFreeRegion& region) {
  if (!(step > 0) || !(lo <= hi)) throw DomainError("computed_schedule: need lo <= hi and step > 0");
  std::vector<ScheduleEntry> out;
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9L));
  for (long i = 0; i <= n; ++i) {
    const Real L = lo + static_cast<Real>(i) * step;
    const auto row = pintz::make_row(L, table, region);
    out.push_back({L, row.eps0.value(), "computed, sigma = " + std::to_string(static_cast<double>(row.sigma))});
  }
  return out;
}

namespace {

void check_schedule(const std::vector<ScheduleEntry>& schedule, Real x_log) {
  if (schedule.empty() || schedule.front().threshold_log != kUpperRangeStartLog) {
    throw DomainError("e_upper: schedule must start at log x = 1000");
  }
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (!(schedule[i].threshold_log > schedule[i - 1].threshold_log)) {
      throw DomainError("e_upper: schedule thresholds must be strictly ascending");
    }
  }
  for (const auto& e : schedule) {
    if (!e.eps0.is_positive()) throw DomainError("e_upper: schedule epsilon0 must be positive");
  }
  if (!(x_log >= schedule.front().threshold_log)) throw DomainError("e_upper: x below the schedule start");
}

// Pieces of E that do not depend on x: the constant-size terms and
// eps0_i * int dt / log^2 t over each complete schedule segment below max_log.
struct EParts {
  LogScalar exact_range;
  LogScalar mid_range;
  std::vector<LogScalar> full_segments;
};

EParts prepare(const std::vector<ScheduleEntry>& schedule, const DirectedValue& exact_range, Real max_log) {
  EParts parts{exact_range.upper(), mid_range_term().upper(), {}};
  for (std::size_t i = 0; i + 1 < schedule.size() && schedule[i + 1].threshold_log <= max_log; ++i) {
    const auto seg = inv_log_power_enclosure(schedule[i].threshold_log, schedule[i + 1].threshold_log, 2).upper();
    parts.full_segments.push_back(round_up(schedule[i].eps0 * seg));
  }
  return parts;
}

LogScalar e_upper_with(Real x_log, const std::vector<ScheduleEntry>& schedule, const EParts& parts) {
  std::vector<Term> terms;
  std::size_t last = 0;
  while (last + 1 < schedule.size() && schedule[last + 1].threshold_log <= x_log) ++last;
  terms.push_back({1, round_up(LogScalar::from_log(x_log) * schedule[last].eps0 / LogScalar::from_real(x_log))});
  terms.push_back({1, parts.exact_range});
  terms.push_back({1, parts.mid_range});
  for (std::size_t i = 0; i < last; ++i) terms.push_back({1, parts.full_segments[i]});
  const Real a = schedule[last].threshold_log;
  if (x_log > a) {
    const auto seg = inv_log_power_enclosure(a, x_log, 2).upper();
    terms.push_back({1, round_up(schedule[last].eps0 * seg)});
  }
  return combined_upper(ls_combine(terms));
}

}  // namespace

LogScalar e_upper(Real x_log, const std::vector<ScheduleEntry>& schedule, const primes::SieveTables& tables) {
  return e_upper(x_log, schedule, exact_range_term(tables));
}

LogScalar e_upper(Real x_log, const std::vector<ScheduleEntry>& schedule, const ExactRangeCertificate& exact_range) {
  check_schedule(schedule, x_log);
  return e_upper_with(x_log, schedule, prepare(schedule, exact_range.with_boundary, x_log));
}

std::vector<PairCheck> pair_check(Real lo, Real hi, Real step, const std::vector<ScheduleEntry>& schedule,
                                  const primes::SieveTables& tables, const CorollaryTargets& rhs) {
  if (!(step > 0) || !(lo < hi)) throw DomainError("pair_check: need lo < hi and step > 0");
  check_schedule(schedule, lo + step);
  const auto parts = prepare(schedule, exact_range_term(tables).with_boundary, hi + step);
  std::vector<PairCheck> out;
  const auto n = static_cast<long>(std::ceil((hi - lo) / step - 1e-9L));
  for (long i = 0; i < n; ++i) {
    const Real k0 = lo + static_cast<Real>(i) * step;
    const Real k1 = k0 + step;
    const LogScalar e = e_upper_with(k1, schedule, parts);
    const LogScalar target = round_down(LogScalar::from_log(std::log(1.001L * rhs.coefficient) + k0 +
                                                            rhs.log_power * std::log(k0) -
                                                            rhs.exp_coefficient * std::sqrt(k0)));
    out.push_back({k0, k1, e, target, e <= target});
  }
  return out;
}

Real small_x_bound(Real x) {
  if (!(x > 2) || x > 1e19L) throw RangeError("small_x_bound: x must lie in (2, 1e19]");
  const Real l = std::log(x);
  return std::sqrt(x) / l * (1.95L + 3.9L / l + 19.5L / (l * l));
}

namespace {

const Integrand kInvLog{[](Real t) { return 1 / std::log(t); }, Shape::convex, {}};

}  // namespace

DirectedValue li_enclosure(Real x, Real tol) {
  if (!(x >= 2)) throw DomainError("li_enclosure: need x >= 2");
  if (x == 2) return DirectedValue::exact(0);
  const auto q = adaptive_quad(kInvLog, 2, x, tol);
  q.require_converged();
  return q.enclosure;
}

std::vector<DirectedValue> li_on_grid(const std::vector<Real>& points, Real tol_per_piece) {
  std::vector<DirectedValue> out;
  out.reserve(points.size());
  DirectedValue acc = DirectedValue::exact(0);
  Real prev = 2;
  for (const Real x : points) {
    if (!(x >= prev)) throw DomainError("li_on_grid: points must be ascending and >= 2");
    if (x > prev) {
      const auto q = adaptive_quad(kInvLog, prev, x, tol_per_piece);
      q.require_converged();
      acc = acc + q.enclosure;
    }
    out.push_back(acc);
    prev = x;
  }
  return out;
}

}  // namespace pnt::pi_li
