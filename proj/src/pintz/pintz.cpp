#include "pnt/pintz/pintz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <string>

#include "pnt/error.hpp"

namespace pnt::pintz {

namespace {

void check_args(Real sigma, Real L0, const ZeroFreeRegion& region) {
  region.validate();
  if (!(sigma >= 0.75L && sigma < 1)) {
    throw DomainError("sigma " + std::to_string(static_cast<double>(sigma)) + " outside [0.75, 1)");
  }
  if (!(L0 >= kMinLogX0)) {
    throw DomainError("log x0 = " + std::to_string(static_cast<double>(L0)) +
                      " below 1000; the factor 2.0025 on N(sigma, T) / T needs log x0 >= 1000");
  }
}

LogScalar ls_real(Real v) { return LogScalar::from_real(v); }

LogScalar sum_of(std::initializer_list<LogScalar> values) {
  std::vector<Term> terms;
  for (const auto& v : values) terms.push_back({1, v});
  return ls_combine(terms).value;
}

}  // namespace

Real exponent_B(Real sigma) { return (5 - 2 * sigma) / 2; }

Real exponent_exact(Real sigma) { return (16 * sigma - 10) / 3; }

Real exponent_C(Real sigma) { return round_down_decimals(exponent_exact(sigma), 2); }

LogScalar k_factor(Real sigma, Real L0, const ZeroFreeRegion& region) {
  check_args(sigma, L0, region);
  const Real u = std::sqrt(L0 / region.R);
  return LogScalar::from_log(-((10 - 16 * sigma) / 3) * u - (5 - 2 * sigma) * std::log(u));
}

LogScalar Corrections::sum() const { return sum_of({C3, C4, C5}); }

Corrections pintz_constants(Real sigma, Real L0, const ZeroDensityTable& table, const ZeroFreeRegion& region) {
  const LogScalar k = k_factor(sigma, L0, region);
  const auto& entry = table.at(sigma);
  const Real ratio = L0 / region.R;
  const Real u = std::sqrt(ratio);
  const LogScalar c3 = ls_real(2) * LogScalar::from_log(-2 * u + 2 * std::log(L0)) * k;
  const LogScalar c4 =
      LogScalar::from_log(L0 * (sigma - 1)) * ls_real(2 / std::numbers::pi_v<Real> * ratio + 1.8642L) * k;
  const LogScalar c5_coeff = ls_real(8.01L) * LogScalar::from_log(-2 * u + std::log(ratio)) * k;
  return {c3, c4, c5_coeff * ls_real(entry.C2), c5_coeff, k};
}

Real a_floor(Real sigma, const ZeroDensityTable& table) {
  return 2.0025L * std::pow(Real{2}, 5 - 2 * sigma) * table.at(sigma).C1;
}

Real big_A(Real sigma, Real L0, const ZeroDensityTable& table, const ZeroFreeRegion& region) {
  const auto c = pintz_constants(sigma, L0, table, region);
  return sum_of({ls_real(a_floor(sigma, table)), c.sum()}).to_real();
}

LogScalar epsilon0(Real sigma, Real L0, const ZeroDensityTable& table, const ZeroFreeRegion& region) {
  const Real A = big_A(sigma, L0, table, region);
  const Real ratio = L0 / region.R;
  return ls_real(A) *
         LogScalar::from_log(exponent_B(sigma) * std::log(ratio) - exponent_exact(sigma) * std::sqrt(ratio));
}

LogDerivatives correction_log_derivatives(Real sigma, Real L, const ZeroFreeRegion& region) {
  check_args(sigma, L, region);
  const Real u = std::sqrt(L / region.R);
  const Real dk = -((10 - 16 * sigma) / 3) * u / (2 * L) - (5 - 2 * sigma) / (2 * L);
  const Real pi = std::numbers::pi_v<Real>;
  return {
      -u / L + 2 / L + dk,
      (sigma - 1) + (2 / (pi * region.R)) / ((2 / pi) * (L / region.R) + 1.8642L) + dk,
      -u / L + 1 / L + dk,
  };
}

bool a_is_decreasing(Real sigma, Real X, const ZeroDensityTable& table, const ZeroFreeRegion& region) {
  const auto d = correction_log_derivatives(sigma, X, region);
  if (!(d.C3 < 0 && d.C4 < 0 && d.C5 < 0)) return false;
  constexpr int kGrid = 1000;
  LogScalar prev = pintz_constants(sigma, X, table, region).sum();
  for (int i = 1; i < kGrid; ++i) {
    const Real L = X * std::pow(Real{100}, static_cast<Real>(i) / (kGrid - 1));
    const LogScalar cur = pintz_constants(sigma, L, table, region).sum();
    if (!(cur < prev)) return false;
    prev = cur;
  }
  return true;
}

LogScalar Scientific::value() const {
  return ls_real(mantissa) * LogScalar::from_log(exp10 * std::numbers::ln10_v<Real>);
}

std::string Scientific::str() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2Lfe%+d", mantissa, exp10);
  return buf;
}

Real round_up_decimals(Real v, int places) {
  const Real scale = std::pow(Real{10}, places);
  Real r = std::ceil(v * scale) / scale;
  if (r < v) r = std::nextafter(r, std::numeric_limits<Real>::infinity());
  return r;
}

Real round_down_decimals(Real v, int places) {
  const Real scale = std::pow(Real{10}, places);
  Real r = std::floor(v * scale) / scale;
  if (r > v) r = std::nextafter(r, -std::numeric_limits<Real>::infinity());
  return r;
}

Scientific round_up_significant(const LogScalar& v, int digits) {
  if (!v.is_positive()) throw DomainError("round_up_significant: value must be positive");
  const Real l10 = v.log10_mag();
  int e = static_cast<int>(std::floor(l10));
  Real m = std::pow(Real{10}, l10 - e);
  // Guard the mantissa against landing just outside [1, 10).
  if (m >= 10) {
    m /= 10;
    ++e;
  } else if (m < 1) {
    m *= 10;
    --e;
  }
  // The nudge absorbs rounding in pow so an exact boundary value is kept.
  const Real scale = std::pow(Real{10}, digits - 1);
  m = std::ceil(m * scale * (1 - 4 * kRealEpsilon)) / scale;
  if (m >= 10) {
    m /= 10;
    ++e;
  }
  return {m, e};
}

PintzRow make_row(Real X, const ZeroDensityTable& table, const ZeroFreeRegion& region, std::vector<Real> sigmas) {
  if (sigmas.empty()) sigmas = table.sigmas();
  PintzRow row{};
  row.X = X;
  const Candidate* best = nullptr;
  for (const Real s : sigmas) {
    row.candidates.push_back({s, epsilon0(s, X, table, region), a_is_decreasing(s, X, table, region)});
  }
  for (const auto& c : row.candidates) {
    if (c.decreasing && (!best || c.eps0 < best->eps0)) best = &c;
  }
  if (!best) {
    throw CertificationError("no candidate sigma has A(sigma, x) decreasing beyond log x = " +
                             std::to_string(static_cast<double>(X)));
  }
  const Real sigma = best->sigma;
  row.sigma = sigma;
  row.exact_A = big_A(sigma, X, table, region);
  row.A = round_up_decimals(row.exact_A, 1);
  row.B = exponent_B(sigma);
  row.exact_exponent = exponent_exact(sigma);
  row.C = exponent_C(sigma);
  row.exact_eps0 = best->eps0;
  row.eps0 = round_up_significant(best->eps0, 3);
  row.corrections = pintz_constants(sigma, X, table, region);
  row.k = row.corrections.k;
  return row;
}

Real theta_variant(const PintzRow& row) { return round_up_decimals(row.A + 0.1L, 1); }

const std::vector<TargetRow>& reference_table() {
  static const std::vector<TargetRow> rows = {
      {1000, 0.98L, 461.9L, 1.52L, 1.89L, {1.20L, -5}},   {2000, 0.98L, 411.4L, 1.52L, 1.89L, {8.35L, -10}},
      {3000, 0.98L, 379.6L, 1.52L, 1.89L, {4.51L, -13}},  {4000, 0.98L, 356.3L, 1.52L, 1.89L, {7.33L, -16}},
      {5000, 0.99L, 713.0L, 1.51L, 1.94L, {9.77L, -19}},  {6000, 0.99L, 611.6L, 1.51L, 1.94L, {4.23L, -21}},
      {7000, 0.99L, 590.1L, 1.51L, 1.94L, {3.09L, -23}},  {8000, 0.99L, 570.5L, 1.51L, 1.94L, {3.12L, -25}},
      {9000, 0.99L, 552.3L, 1.51L, 1.94L, {4.11L, -27}},  {10000, 0.99L, 535.4L, 1.51L, 1.94L, {6.78L, -29}},
  };
  return rows;
}

std::vector<BacksolveGroup> backsolve_density(const std::vector<TargetRow>& targets, Real assumed_C2,
                                              const ZeroFreeRegion& region) {
  if (!(assumed_C2 > 0)) throw DomainError("backsolve_density: C2 must be positive");
  std::map<Real, BacksolveGroup> groups;
  for (const auto& t : targets) {
    // Any positive C1 works for the corrections; only C2 enters them.
    const ZeroDensityTable probe({{t.sigma, 1, assumed_C2, {}, 0}});
    const auto c = pintz_constants(t.sigma, t.X, probe, region);
    const Real rest = t.A - c.sum().to_real();
    const Real c1 = rest / (2.0025L * std::pow(Real{2}, 5 - 2 * t.sigma));
    auto& g = groups[t.sigma];
    g.sigma = t.sigma;
    g.estimates.push_back({t.X, c1});
  }
  std::vector<BacksolveGroup> out;
  for (auto& [sigma, g] : groups) {
    Real sum = 0, lo = g.estimates.front().C1, hi = lo;
    for (const auto& e : g.estimates) {
      sum += e.C1;
      lo = std::min(lo, e.C1);
      hi = std::max(hi, e.C1);
    }
    g.mean = sum / static_cast<Real>(g.estimates.size());
    if (g.estimates.size() >= 2) {
      g.spread = (hi - lo) / g.mean;
      g.consistent = g.spread <= kBacksolveSpreadLimit;
    }
    out.push_back(std::move(g));
  }
  return out;
}

ZeroDensityTable density_from_backsolve(const std::vector<BacksolveGroup>& groups, Real C2,
                                        const std::string& source, Real rh_height) {
  std::vector<zeta::DensityEntry> entries;
  for (const auto& g : groups) entries.push_back({g.sigma, g.mean, C2, source, rh_height});
  return ZeroDensityTable(std::move(entries));
}

}  // namespace pnt::pintz
