#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "pnt/error.hpp"
#include "pnt/ramanujan/ramanujan.hpp"

using namespace pnt;
using namespace pnt::ramanujan;
using oracle::F;

namespace {

const primes::SieveTables& tables_1e8() {
  static const auto t = primes::build_sieve(100000000);
  return t;
}

const PiecewiseEnvelope& env() {
  static const auto e = standard_envelope();
  return e;
}

Real to_r(const F& v) { return static_cast<Real>(v); }

// (log^6 x_a / x_a) int_2^x_a (720 + sign a(t)) / log^7 t dt in u = log t
// coordinates over [L - 60, L]; the rest is below e^-60 relative.
F k_oracle(const F& L, int sign, const F& scale = 1) {
  auto f = [&](F v) {
    const F u = L + v;
    return (720 + sign * oracle::a_env(u, scale)) * exp(v) * pow(L / u, 6) / u;
  };
  return oracle::gk(f, F(-60), F(0));
}

F k3_oracle(const F& L) {
  const F l2 = log(F(2));
  F s = 0, fact = 1;
  for (int k = 1; k <= 5; ++k) {
    fact *= k;
    s += fact / pow(l2, k + 1);
  }
  return 2 * exp(-L) * pow(L, 6) * s;
}

F bracket_oracle(const F& L) {
  return 1 / L + F(7 * 256) / (L * L) + 7 * pow(L, 6) / (exp(L / 2) * pow(log(F(2)), 8));
}

F epsM_oracle(const F& L, const F& M) {
  return 72 + 2 * M + (2 * M + 132) / L + (4 * M + 288) / (L * L) + (12 * M + 576) / pow(L, 3) +
         48 * M / pow(L, 4) + M * M / pow(L, 5);
}

F epsm_oracle(const F& L, const F& m) {
  return 206 + m + 364 / L + 381 / pow(L, 2) + 238 / pow(L, 3) + 97 / pow(L, 4) + 30 / pow(L, 5) + 8 / pow(L, 6);
}

bool encloses(const DirectedValue& d, const F& v, Real slack = 0) {
  return d.lower().to_real() - slack <= to_r(v) && to_r(v) <= d.upper().to_real() + slack;
}

}  // namespace

TEST(Envelope, Structure) {
  const auto& b = env().branches();
  ASSERT_EQ(b.size(), 7u);
  EXPECT_NEAR(static_cast<double>(b.front().lower_log), std::log(2.0), 1e-15);
  EXPECT_TRUE(std::isinf(b.back().upper_log));
  for (std::size_t i = 1; i < b.size(); ++i) EXPECT_EQ(b[i].lower_log, b[i - 1].upper_log);
  EXPECT_THROW(PiecewiseEnvelope({b[0], b[2]}, "gap"), DomainError);
  auto bad = b;
  bad[3].coef = 0;
  EXPECT_THROW(PiecewiseEnvelope(bad, "zero"), DomainError);
}

TEST(Envelope, AgainstOracle) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(std::log(2.0) + 1e-9, 6000);
  for (int i = 0; i < 2000; ++i) {
    const Real L = u(rng);
    const auto v = a_envelope(L, env());
    const F want = oracle::a_env(F(L));
    ASSERT_NEAR(static_cast<double>(v.a.log_mag()), static_cast<double>(to_r(log(want))), 1e-13) << L;
    ASSERT_NEAR(static_cast<double>(v.ratio.log_mag()), static_cast<double>(to_r(log(want / pow(F(L), 5)))), 1e-13);
  }
  // Boundaries follow the printed half-open ranges.
  for (const Real L : {1.0986L, 1.0987L, 58.0L, 1169.0L, 2000.0L, 3000.0L, 1168.999L, 1999.999L, 2999.999L, 58.001L}) {
    const F want = oracle::a_env(F(L));
    EXPECT_NEAR(static_cast<double>(a_envelope(L, env()).a.log_mag()), static_cast<double>(to_r(log(want))), 1e-13)
        << static_cast<double>(L);
  }
}

TEST(Envelope, Examples) {
  // The printed (2 - log 2) / 2 is the equality case at x = 2 and holds from
  // x = 3; just above 2 the envelope needs (3 - log 2) / 3.
  const Real just_above_2 = std::log(2.0L) + 1e-15L;
  EXPECT_NEAR(static_cast<double>(a_envelope(just_above_2, env()).ratio.to_real()), (3 - std::log(2.0)) / 3, 1e-15);
  EXPECT_NEAR(static_cast<double>(a_envelope(std::log(3.0L), env()).ratio.to_real()), 0.65343, 1e-5);
  EXPECT_NEAR(static_cast<double>(a_envelope(std::log(599.0L), env()).ratio.to_real()), (2 - std::log(2.0)) / 2, 1e-15);
  // sup over (2, 3) of |theta(x) - x| / x = 1 - log 2 / x.
  for (const Real x : {2.000001L, 2.5L, 2.999999L}) {
    EXPECT_GT(1 - std::log(2.0L) / x, (2 - std::log(2.0L)) / 2);
    EXPECT_LE(1 - std::log(2.0L) / x, a_envelope(std::log(x), env()).ratio.to_real());
  }
  EXPECT_NEAR(static_cast<double>(a_envelope(3914, env()).a.to_real()), 1310.3478938485328, 1e-9);
  EXPECT_NEAR(static_cast<double>(a_envelope(3915, env()).a.to_real()), 1304.1616705258375, 1e-9);
  EXPECT_THROW(a_envelope(std::log(2.0L), env()), DomainError);
  // Scale multiplies every branch.
  const auto scaled = standard_envelope(1.05L);
  for (const Real L : {1.0L, 30.0L, 500.0L, 1500.0L, 2500.0L, 3914.0L}) {
    EXPECT_NEAR(static_cast<double>(a_envelope(L, scaled).a.log_mag() - a_envelope(L, env()).a.log_mag()),
                std::log(1.05), 1e-14);
  }
}

TEST(Envelope, RangeEnclosesSamples) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.7, 5000);
  for (int i = 0; i < 200; ++i) {
    Real lo = u(rng), hi = u(rng);
    if (lo > hi) std::swap(lo, hi);
    hi = std::min(hi, lo + 300);
    const auto [mn, mx] = env().range(lo, hi);
    for (int j = 0; j <= 50; ++j) {
      const Real L = lo + (hi - lo) * j / 50;
      const auto a = a_envelope(L, env()).a;
      ASSERT_LE(mn, a) << lo << " " << hi;
      ASSERT_LE(a, mx) << lo << " " << hi;
    }
  }
}

TEST(Envelope, NonIncreasingFrom3914) {
  EXPECT_TRUE(a_non_increasing_from(3914, env()));
  EXPECT_TRUE(a_non_increasing_from(3000, env()));
  EXPECT_FALSE(a_non_increasing_from(2999, env()));
  Real prev = INFINITY;
  for (Real L = 3914; L <= 40000; L += 3.7L) {
    const Real a = a_envelope(L, env()).a.log_mag();
    ASSERT_LE(a, prev);
    prev = a;
  }
  // Log-derivative of the last branch: 6.52 / L - 1.89 / (2 sqrt(L R)).
  const Real turn = std::pow(2 * 6.52L * std::sqrt(5.573412L) / 1.89L, 2);
  EXPECT_LT(turn, 3914);
}

// |theta(x) - x| log^5 x <= x a(x) on the sieve range, at grid points and at
// both sides of the next prime, where |theta - x| peaks.
TEST(Envelope, ValidOnSieveRange) {
  const auto& t = tables_1e8();
  Real worst = -INFINITY;
  auto check = [&](Real x) {
    const Real th = primes::chebyshev(t, x).theta;
    const Real L = std::log(x);
    const Real lhs = std::log(std::fabs(th - x)) + 5 * std::log(L);
    const Real rhs = L + a_envelope(L, env()).a.log_mag();
    worst = std::max(worst, lhs - rhs);
    return lhs <= rhs;
  };
  for (int i = 0; i < 10000; ++i) {
    const Real x = std::pow(1e8L / 2.0001L, i / 9999.0L) * 2.0001L;
    ASSERT_TRUE(check(x)) << static_cast<double>(x);
    const auto n = static_cast<std::uint64_t>(x);
    const auto next = t.primes_in(n + 1, std::min<std::uint64_t>(n + 1000, t.limit()));
    if (!next.empty()) {
      const auto p = static_cast<Real>(next.front());
      ASSERT_TRUE(check(p)) << static_cast<double>(p);
      ASSERT_TRUE(check(p - 1e-9L)) << static_cast<double>(p);
    }
  }
  RecordProperty("worst_log_ratio", std::to_string(static_cast<double>(worst)));
}

TEST(Constants, AgainstOracle) {
  const auto k = ram_constants(3914, env());
  const F L = 3914;
  const F k1 = k_oracle(L, 1), k2 = k_oracle(L, -1);
  EXPECT_TRUE(encloses(k.K1, k1, 1e-20L)) << static_cast<double>(to_r(k1));
  EXPECT_TRUE(encloses(k.K2, k2, 1e-20L)) << static_cast<double>(to_r(k2));
  EXPECT_LT(k.K1.upper().to_real() - k.K1.lower().to_real(), 1e-3L);
  EXPECT_LT(k.K2.upper().to_real() - k.K2.lower().to_real(), 1e-3L);
  EXPECT_NEAR(static_cast<double>(to_r(k1)), 0.52, 0.005);
  EXPECT_NEAR(static_cast<double>(to_r(k2)), -0.15, 0.005);
  EXPECT_NEAR(static_cast<double>(k.K3.log_mag()), static_cast<double>(to_r(log(k3_oracle(L)))), 1e-12);
  EXPECT_LT(k.K3.log_mag(), -100 * std::log(10.0L));
  EXPECT_LE(k.far_slack.to_real(), kFarSlackLimit);
  EXPECT_NEAR(static_cast<double>(k.a_at_xa.to_real()), 1310.3478938485328, 1e-9);
  EXPECT_GT(k.K1.lower(), k.K2.upper());
}

TEST(Constants, LaplaceEstimate) {
  // 720 / L (1 + 7 / L) + a(x_a) / L, to about one percent.
  const auto k = ram_constants(3914, env());
  const Real L = 3914;
  const Real a = a_envelope(L, env()).a.to_real();
  const Real approx = 720 / L * (1 + 7 / L) + a / L;
  EXPECT_NEAR(static_cast<double>(k.K1.upper().to_real() / approx), 1.0, 0.01);
}

TEST(Constants, Preconditions) {
  EXPECT_THROW(ram_constants(2999, env()), CertificationError);
  // At e^3000 the part below e^(x_a - 50) is not yet below the negligibility limit.
  EXPECT_THROW(ram_constants(3000, env()), CertificationError);
  EXPECT_NO_THROW(ram_constants(3100, env()));
  EXPECT_LE(ram_constants(3100, env()).far_slack.to_real(), kFarSlackLimit);
}

TEST(Bracket, Value) {
  const auto b = envelope_bracket(3914);
  EXPECT_TRUE(encloses(b, bracket_oracle(F(3914))));
  EXPECT_NEAR(static_cast<double>(b.upper().to_real()), 3.7247e-4, 0.0001e-4);
  EXPECT_NEAR(static_cast<double>(1 / 3914.0L), 2.55493e-4, 1e-9);
  EXPECT_NEAR(static_cast<double>(7 * 256 / (3914.0L * 3914.0L)), 1.16976e-4, 1e-9);
}

TEST(Envelopes, AgainstOracle) {
  const auto k = ram_constants(3914, env());
  const auto e = envelopes(3915, k, env());
  const F L = 3914, x = 3915;
  const F br = bracket_oracle(L);
  const F a_x = oracle::a_env(x), a_xa = oracle::a_env(L);
  const F Ma = 120 + a_x + k_oracle(L, 1) + (720 + a_xa) * br;
  const F ma = 120 - a_x - (k_oracle(L, -1) + k3_oracle(L)) - a_xa * br;
  EXPECT_TRUE(encloses(e.Ma, Ma, 1e-12L)) << static_cast<double>(to_r(Ma));
  EXPECT_TRUE(encloses(e.ma, ma, 1e-12L)) << static_cast<double>(to_r(ma));
  EXPECT_NEAR(static_cast<double>(e.Ma.upper().to_real()), 1425, 1);
  EXPECT_NEAR(static_cast<double>(e.ma.lower().to_real()), -1184, 1);
  EXPECT_THROW(envelopes(3913, k, env()), DomainError);
}

TEST(Envelopes, CollapseWhenEnvelopeVanishes) {
  // With a scaled towards zero the envelopes reduce to their constant parts.
  const auto tiny = standard_envelope(1e-30L);
  const auto k = ram_constants(3914, tiny);
  const auto e = envelopes(3915, k, tiny);
  const Real br = envelope_bracket(3914).upper().to_real();
  EXPECT_NEAR(static_cast<double>(e.Ma.upper().to_real()), static_cast<double>(120 + k.K1.upper().to_real() + 720 * br),
              1e-9);
  EXPECT_NEAR(static_cast<double>(e.ma.lower().to_real()), static_cast<double>(120 - k.K2.upper().to_real()), 1e-9);
  EXPECT_NEAR(static_cast<double>(k.K1.upper().to_real()), static_cast<double>(k.K2.upper().to_real()), 1e-9);
}

TEST(Envelopes, UpperAboveLower) {
  const auto k = ram_constants(3914, env());
  for (Real x = 3914; x <= 8000; x += 97.3L) {
    const auto e = envelopes(x, k, env());
    ASSERT_GT(e.Ma.lower(), e.ma.upper()) << static_cast<double>(x);
  }
}

TEST(Epsilon, AgainstPrintedPolynomials) {
  for (const auto& [L, M, m] : {std::tuple{3915.0L, 1425.4392L, -1184.497L}, {50.0L, 3.0L, -2.0L}, {2.5L, 0.0L, 0.0L}}) {
    const auto e = epsilon_pair(L, DirectedValue::exact(M), DirectedValue::exact(m));
    EXPECT_TRUE(encloses(e.epsM, epsM_oracle(F(L), F(M)))) << static_cast<double>(L);
    EXPECT_TRUE(encloses(e.epsm, epsm_oracle(F(L), F(m)))) << static_cast<double>(L);
    EXPECT_LT(e.epsM.upper().to_real() - e.epsM.lower().to_real(), 1e-12L * (1 + std::fabs(M * M)));
  }
  const auto e = epsilon_pair(3915, DirectedValue::exact(1425.4392L), DirectedValue::exact(-1184.497L));
  EXPECT_NEAR(static_cast<double>(e.epsM.upper().to_real()), 2924, 1);
  EXPECT_NEAR(static_cast<double>(e.epsm.lower().to_real()), -978, 1);
  const auto z = epsilon_pair(10, DirectedValue::exact(0), DirectedValue::exact(0));
  EXPECT_NEAR(static_cast<double>(z.epsM.upper().to_real()), 72 + 13.2 + 2.88 + 0.576, 1e-12);
  EXPECT_THROW(epsilon_pair(1, DirectedValue::exact(0), DirectedValue::exact(0)), DomainError);
}

TEST(Epsilon, IncreasingInUpperEnvelope) {
  Real prev = -INFINITY;
  for (Real M = -100; M <= 5000; M += 37.5L) {
    const Real v = epsilon_pair(3915, DirectedValue::exact(M), DirectedValue::exact(0)).epsM.upper().to_real();
    ASSERT_GT(v, prev);
    prev = v;
  }
}

TEST(Sufficiency, CertifiesPublishedThreshold) {
  const auto s = sufficiency_check(3914, 3915, env());
  EXPECT_TRUE(s.pass);
  EXPECT_GT(s.margin, 0);
  EXPECT_NEAR(static_cast<double>(s.margin), 13, 0.5);
  // Margin assembled from the oracle pieces.
  const F L = 3914, x = 3915;
  const F br = bracket_oracle(L);
  const F Ma = 120 + oracle::a_env(x) + k_oracle(L, 1) + (720 + oracle::a_env(L)) * br;
  const F ma = 120 - oracle::a_env(x) - (k_oracle(L, -1) + k3_oracle(L)) - oracle::a_env(L) * br;
  const F margin = x - (epsM_oracle(x, Ma) - epsm_oracle(x, ma));
  EXPECT_LE(s.margin, to_r(margin));
  EXPECT_GT(s.margin, to_r(margin) - 0.01L);
  EXPECT_THROW(sufficiency_check(3914, 3914, env()), DomainError);
}

TEST(Sufficiency, MarginGrowsWithX) {
  Real prev = sufficiency_check(3914, 3914.0001L, env()).margin;
  for (Real x = 3915; x <= 6000; x += 104.25L) {
    const Real m = sufficiency_check(3914, x, env()).margin;
    ASSERT_GE(m, prev) << static_cast<double>(x);
    prev = m;
  }
  EXPECT_GT(sufficiency_check(3914, 6000, env()).margin, sufficiency_check(3914, 3914.0001L, env()).margin);
}

TEST(Sufficiency, InflatedEnvelopeFails) {
  const auto s = sufficiency_check(3914, 3915, standard_envelope(1.05L));
  EXPECT_FALSE(s.pass);
  EXPECT_LT(s.margin, 0);
}

TEST(Scan, FindsThreshold) {
  const auto r = threshold_scan(env(), 3900, 3930);
  ASSERT_TRUE(r.first_pass.has_value());
  EXPECT_LE(*r.first_pass, 3915);
  EXPECT_EQ(r.curve.back().L, *r.first_pass);
  EXPECT_GT(r.curve.back().margin, 0);
  for (std::size_t i = 0; i + 1 < r.curve.size(); ++i) EXPECT_LE(r.curve[i].margin, 0);
  EXPECT_FALSE(threshold_scan(env(), 3910, 3910).first_pass.has_value());
  EXPECT_THROW(threshold_scan(env(), 3911, 3910), DomainError);
}

TEST(Scan, InflatedEnvelopeShiftsThreshold) {
  const auto base = threshold_scan(env(), 3900, 3930);
  const auto r = threshold_scan(standard_envelope(1.05L), 3916, 3930);
  if (r.first_pass) {
    EXPECT_GT(*r.first_pass, *base.first_pass);
  }
  const auto wide = threshold_scan(standard_envelope(1.05L), 3900, 4200);
  ASSERT_TRUE(wide.first_pass.has_value());
  EXPECT_GT(*wide.first_pass, *base.first_pass);
}

namespace {

// Decides pi(x)^2 < e x / log x * pi(x / e) at 50 digits from given counts.
Verdict verdict_oracle(std::uint64_t x, std::uint64_t pi_x, std::uint64_t pi_xe) {
  const F lhs = F(pi_x) * F(pi_x);
  const F rhs = exp(F(1)) * F(x) / log(F(x)) * F(pi_xe);
  if (abs(lhs - rhs) < F("1e-40") * rhs) return Verdict::indeterminate;
  return lhs < rhs ? Verdict::holds : Verdict::fails;
}

std::uint64_t pi_by_trial(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 2; k <= n; ++k) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= k; ++d) {
      if (k % d == 0) {
        prime = false;
        break;
      }
    }
    c += prime;
  }
  return c;
}

}  // namespace

TEST(SpotCheck, SmallExample) {
  const auto t = primes::build_sieve(1000);
  const auto s = inequality_spot_check(20, t);
  EXPECT_EQ(s.pi_x, 8u);
  EXPECT_EQ(s.x_over_e, 7u);
  EXPECT_EQ(s.pi_x_over_e, 4u);
  EXPECT_EQ(s.verdict, verdict_oracle(20, 8, 4));
  EXPECT_EQ(to_string(s.verdict), to_string(verdict_oracle(20, 8, 4)));
}

TEST(SpotCheck, AgreesWithOracle) {
  const auto t = primes::build_sieve(2000000);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> u(6, 2000000);
  int fails = 0;
  for (int i = 0; i < 3000; ++i) {
    const std::uint64_t x = i < 300 ? 6 + i : u(rng);
    const auto s = inequality_spot_check(x, t);
    const auto xe = static_cast<std::uint64_t>(to_r(floor(F(x) / exp(F(1)))));
    ASSERT_EQ(s.x_over_e, xe) << x;
    ASSERT_EQ(s.pi_x_over_e, t.pi(xe));
    ASSERT_EQ(s.verdict, verdict_oracle(x, s.pi_x, s.pi_x_over_e)) << x;
    fails += s.verdict == Verdict::fails;
  }
  RecordProperty("fails", fails);
  for (const std::uint64_t x : {6ULL, 30ULL, 300ULL, 3000ULL}) {
    EXPECT_EQ(inequality_spot_check(x, t).pi_x, pi_by_trial(x));
  }
}

TEST(SpotCheck, Preconditions) {
  const auto t = primes::build_sieve(1000);
  EXPECT_THROW(inequality_spot_check(5, t), DomainError);
  EXPECT_THROW(inequality_spot_check(1001, t), CoverageError);
}

TEST(SpotCheck, StreamingMatchesResident) {
  const auto& t = tables_1e8();
  for (const std::uint64_t x : {1000003ULL, 54321987ULL, 100000000ULL}) {
    const auto a = inequality_spot_check(x, t);
    std::uint64_t calls = 0;
    const auto b = inequality_spot_check_streaming(x, [&](std::uint64_t) { ++calls; });
    EXPECT_EQ(a.pi_x, b.pi_x);
    EXPECT_EQ(a.pi_x_over_e, b.pi_x_over_e);
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_GT(calls, 0u);
  }
}

TEST(SpotCheck, OneBillion) {
  const auto s = inequality_spot_check_streaming(1000000000);
  EXPECT_EQ(s.pi_x, 50847534u);
  EXPECT_EQ(s.x_over_e, 367879441u);
  EXPECT_EQ(s.verdict, verdict_oracle(1000000000, s.pi_x, s.pi_x_over_e));
  EXPECT_NE(s.verdict, Verdict::indeterminate);
}
