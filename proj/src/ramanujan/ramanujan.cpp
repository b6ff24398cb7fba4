#include "pnt/ramanujan/ramanujan.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pnt/error.hpp"
#include "pnt/numerics/integrals.hpp"

namespace pnt::ramanujan {

namespace {

constexpr int kPower = 7;

DirectedValue dv(Real v) { return DirectedValue::around(v); }
DirectedValue around_log(Real l) { return DirectedValue::around(LogScalar::from_log(l)); }

std::string num(Real v) { return std::to_string(static_cast<double>(v)); }

// Running signed sums of per-panel bounds for the two integrals.
struct PanelSums {
  std::vector<Term> k1_lo, k1_hi, k2_lo, k2_hi;

  void add(const PiecewiseEnvelope& env, const LogPanel& p) {
    const auto I = inv_log_power_panel(p, kPower);
    const auto [a_min, a_max] = env.range(p.lo_log, p.hi_log);
    const auto c720 = LogScalar::from_real(720);
    // (720 + a) > 0 throughout.
    k1_lo.push_back({1, round_down((c720 + a_min) * I.lower())});
    k1_hi.push_back({1, round_up((c720 + a_max) * I.upper())});
    // 720 - a may take either sign; pick the integral bound that keeps the
    // product one-sided.
    const Term hi_w[] = {{720, LogScalar::from_real(1)}, {-1, a_min}};
    const Term lo_w[] = {{720, LogScalar::from_real(1)}, {-1, a_max}};
    const LogScalar w_hi = combined_upper(ls_combine(hi_w));
    const LogScalar w_lo = combined_lower(ls_combine(lo_w));
    k2_hi.push_back({1, round_up(w_hi * (w_hi.is_negative() ? I.lower() : I.upper()))});
    k2_lo.push_back({1, round_down(w_lo * (w_lo.is_negative() ? I.upper() : I.lower()))});
  }

  DirectedValue k1() const { return {combined_lower(ls_combine(k1_lo)), combined_upper(ls_combine(k1_hi))}; }
  DirectedValue k2() const { return {combined_lower(ls_combine(k2_lo)), combined_upper(ls_combine(k2_hi))}; }
};

}  // namespace

RamanujanConstants ram_constants(Real xa_log, const PiecewiseEnvelope& env) {
  if (!(xa_log >= 3000)) {
    throw CertificationError("ram_constants: log x_a = " + num(xa_log) + " is below the final branch start 3000");
  }
  if (!a_non_increasing_from(xa_log, env)) {
    throw CertificationError("ram_constants: a(x) is not verified non-increasing from log x_a = " + num(xa_log));
  }
  const Real near = xa_log - kNearWindow;
  PanelSums far, close;
  // Below the window the scaled contribution is astronomically small, so a
  // coarse partition is enough; it is still bounded and added, not dropped.
  for (const auto& p : inv_log_power_panels(std::numbers::ln2_v<Real>, near, kPower, {1e-2L, 50})) {
    far.add(env, p);
  }
  for (const auto& p : inv_log_power_panels(near, xa_log, kPower, {1e-4L, 0.1L})) close.add(env, p);

  const DirectedValue scale = around_log(6 * std::log(xa_log) - xa_log);
  const DirectedValue far_k1 = scale * far.k1();
  if (!(far_k1.upper() < LogScalar::from_real(kFarSlackLimit))) {
    throw CertificationError("ram_constants: contribution below e^(x_a - 50) is " + to_string(far_k1.upper()) +
                             ", not negligible");
  }

  RamanujanConstants k{};
  k.xa_log = xa_log;
  k.K1 = scale * (far.k1() + close.k1());
  k.K2 = scale * (far.k2() + close.k2());
  std::vector<Term> k3;
  Real fact = 1;
  const Real l2 = std::log(std::numbers::ln2_v<Real>);
  for (int j = 1; j <= 5; ++j) {
    fact *= j;
    k3.push_back({1, LogScalar::from_log(std::log(2 * fact) - (j + 1) * l2 + 6 * std::log(xa_log) - xa_log)});
  }
  k.K3 = combined_upper(ls_combine(k3));
  k.far_slack = far_k1.upper();
  k.a_at_xa = a_envelope(xa_log, env).a;
  return k;
}

DirectedValue envelope_bracket(Real xa_log) {
  if (!(xa_log > 1)) throw DomainError("envelope_bracket: need log x_a > 1");
  const Real l = xa_log;
  const Real log_log2 = std::log(std::numbers::ln2_v<Real>);
  return dv(1) / dv(l) + dv(7 * 256) / dv(l * l) +
         around_log(std::log(Real{7}) + 6 * std::log(l) - l / 2 - 8 * log_log2);
}

Envelopes envelopes(Real x_log, const RamanujanConstants& k, const PiecewiseEnvelope& env) {
  if (!(x_log >= k.xa_log)) throw DomainError("envelopes: need log x >= log x_a");
  const auto a_x = DirectedValue::around(a_envelope(x_log, env).a);
  const auto a_xa = DirectedValue::around(k.a_at_xa);
  const auto br = envelope_bracket(k.xa_log);
  const auto K3 = DirectedValue(LogScalar::zero(), k.K3);
  return {dv(120) + a_x + k.K1 + (dv(720) + a_xa) * br, dv(120) - a_x - (k.K2 + K3) - a_xa * br};
}

EpsilonPair epsilon_pair(Real x_log, const DirectedValue& M, const DirectedValue& m) {
  if (!(x_log > 1)) throw DomainError("epsilon_pair: need log x > 1");
  const auto L = dv(x_log);
  const auto L2 = L * L, L3 = L2 * L, L4 = L3 * L, L5 = L4 * L, L6 = L5 * L;
  const auto epsM = dv(72) + dv(2) * M + (dv(2) * M + dv(132)) / L + (dv(4) * M + dv(288)) / L2 +
                    (dv(12) * M + dv(576)) / L3 + dv(48) * M / L4 + M * M / L5;
  const auto epsm = dv(206) + m + dv(364) / L + dv(381) / L2 + dv(238) / L3 + dv(97) / L4 + dv(30) / L5 +
                    dv(8) / L6;
  return {epsM, epsm};
}

Sufficiency sufficiency_check(Real xa_log, Real x_log, const PiecewiseEnvelope& env) {
  if (!(x_log > xa_log)) throw DomainError("sufficiency_check: need log x > log x_a");
  Sufficiency s{};
  s.xa_log = xa_log;
  s.x_log = x_log;
  s.constants = ram_constants(xa_log, env);
  s.env = envelopes(x_log, s.constants, env);
  s.eps = epsilon_pair(x_log, s.env.Ma, s.env.ma);
  // Conservative both ways: epsM from above, epsm from below.
  const DirectedValue margin = dv(x_log) - DirectedValue(s.eps.epsM.upper(), s.eps.epsM.upper()) +
                               DirectedValue(s.eps.epsm.lower(), s.eps.epsm.lower());
  s.margin = margin.lower().to_real();
  s.pass = s.margin > 0;
  return s;
}

ScanResult threshold_scan(const PiecewiseEnvelope& env, long lo, long hi) {
  if (lo > hi) throw DomainError("threshold_scan: lo > hi");
  ScanResult out;
  for (long L = lo; L < hi; ++L) {
    const auto s = sufficiency_check(static_cast<Real>(L - 1), static_cast<Real>(L), env);
    out.curve.push_back({L, s.margin});
    if (s.pass) {
      out.first_pass = L;
      break;
    }
  }
  return out;
}

}  // namespace pnt::ramanujan
