#include "pnt/numerics/integrals.hpp"

#include <algorithm>
#include <cmath>

#include "pnt/error.hpp"

namespace pnt {

namespace {

constexpr std::size_t kMaxPanels = 10'000'000;
// Ratio of integrand values across one head panel.
constexpr Real kHeadRatio = 1.01L;

// log(e^hi - e^lo) for lo < hi.
Real log_exp_diff(Real lo, Real hi) { return hi + std::log(-std::expm1(lo - hi)); }

}  // namespace

std::vector<LogPanel> inv_log_power_panels(Real a_log, Real b_log, int k, const PanelOptions& opts) {
  if (k < 1) throw DomainError("inv_log_power_panels: k must be positive");
  if (!(a_log <= b_log)) throw DomainError("inv_log_power_panels: lower limit exceeds upper limit");
  if (a_log < std::log(Real{2}) - 64 * kRealEpsilon) {
    throw DomainError("inv_log_power_panels: lower limit below t = 2");
  }
  if (!(opts.rel_slack > 0) || !(opts.max_width > 0)) throw DomainError("inv_log_power_panels: bad options");

  std::vector<LogPanel> panels;
  const Real split = std::min<Real>(b_log, k + 1);
  const Real head_step = std::pow(kHeadRatio, Real{1} / k) - 1;
  Real u = a_log;
  auto push = [&](Real hi, bool by_parts) {
    if (panels.size() >= kMaxPanels) throw RangeError("inv_log_power_panels: panel budget exhausted");
    panels.push_back({u, hi, by_parts});
    u = hi;
  };
  while (u < split) {
    const Real w = std::min(u * head_step, opts.max_width);
    push(std::min(u + w, split), false);
  }
  while (u < b_log) {
    Real w = opts.rel_slack * u * (u - k) / k;
    w = std::clamp(w, u * 1e-12L, opts.max_width);
    push(std::min(u + w, b_log), true);
  }
  return panels;
}

DirectedValue inv_log_power_panel(const LogPanel& p, int k) {
  if (!(p.lo_log < p.hi_log)) throw DomainError("inv_log_power_panel: empty or inverted panel");
  if (p.by_parts) {
    if (!(p.lo_log > k)) throw DomainError("inv_log_power_panel: by-parts panel needs log t > k");
    const Real f_lo = p.lo_log - k * std::log(p.lo_log);
    const Real f_hi = p.hi_log - k * std::log(p.hi_log);
    const Real dF = log_exp_diff(f_lo, f_hi);
    const Real up = dF - std::log1p(-k / p.lo_log);
    const Real down = dF - std::log1p(-k / p.hi_log);
    return {round_down(LogScalar::from_log(down)), round_up(LogScalar::from_log(up))};
  }
  const Real len = log_exp_diff(p.lo_log, p.hi_log);
  const Real up = len - k * std::log(p.lo_log);
  const Real down = len - k * std::log(p.hi_log);
  return {round_down(LogScalar::from_log(down)), round_up(LogScalar::from_log(up))};
}

DirectedValue inv_log_power_enclosure(Real a_log, Real b_log, int k, const PanelOptions& opts) {
  const auto panels = inv_log_power_panels(a_log, b_log, k, opts);
  if (panels.empty()) return {};
  std::vector<Term> lo, hi;
  lo.reserve(panels.size());
  hi.reserve(panels.size());
  for (const auto& p : panels) {
    const auto e = inv_log_power_panel(p, k);
    lo.push_back({1, e.lower()});
    hi.push_back({1, e.upper()});
  }
  return {combined_lower(ls_combine(lo)), combined_upper(ls_combine(hi))};
}

LogScalar bound_inv_log_power_integral(Real a_log, Real b_log, int k, Direction direction) {
  if (a_log > b_log) throw DomainError("bound_inv_log_power_integral: a_log > b_log");
  if (a_log == b_log) return {};
  const auto e = inv_log_power_enclosure(a_log, b_log, k);
  return direction == Direction::upper ? e.upper() : e.lower();
}

}  // namespace pnt
