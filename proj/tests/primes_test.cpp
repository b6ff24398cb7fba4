#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <vector>

#include "oracle.hpp"
#include "pnt/error.hpp"
#include "pnt/numerics/integrals.hpp"
#include "pnt/primes/sieve.hpp"
#include "pnt/primes/theta_deficit.hpp"

using namespace pnt;
using namespace pnt::primes;

namespace {

// Plain sieve of Eratosthenes over odd numbers, kept deliberately naive so it
// shares nothing with the segmented implementation.
std::vector<bool> naive_odd_sieve(std::uint64_t n) {
  std::vector<bool> composite((n + 1) / 2, false);  // index i <-> 2i + 1
  composite[0] = true;
  for (std::uint64_t p = 3; p * p <= n; p += 2) {
    if (composite[p / 2]) continue;
    for (std::uint64_t m = p * p; m <= n; m += 2 * p) composite[m / 2] = true;
  }
  return composite;
}

std::vector<std::uint64_t> trial_division_primes(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k <= n; ++k) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= k; ++d) {
      if (k % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(k);
  }
  return out;
}

const SieveTables& tables_1e8() {
  static const SieveTables t = build_sieve(100'000'000);
  return t;
}

// 10^4 integers spread geometrically over [lo, hi].
std::vector<std::uint64_t> log_grid(Real lo, Real hi, int n = 10000) {
  std::vector<std::uint64_t> out;
  for (int i = 0; i < n; ++i) {
    const Real x = lo * std::pow(hi / lo, static_cast<Real>(i) / (n - 1));
    out.push_back(static_cast<std::uint64_t>(std::floor(x)));
  }
  return out;
}

}  // namespace

TEST(Sieve, SmallLimit) {
  const auto t = build_sieve(10);
  EXPECT_EQ(t.primes_in(0, 10), (std::vector<std::uint64_t>{2, 3, 5, 7}));
  EXPECT_EQ(t.pi(10), 4u);
  EXPECT_FALSE(t.is_prime(1));
  EXPECT_TRUE(t.is_prime(2));
  EXPECT_FALSE(t.is_prime(9));
}

TEST(Sieve, MatchesTrialDivision) {
  const auto want = trial_division_primes(200000);
  const auto t = build_sieve(200000, SieveOptions{.segment_odds = 4096, .checkpoint_interval = 1024});
  EXPECT_EQ(t.primes_in(0, 200000), want);
  for (std::uint64_t n = 0; n <= 200000; n += 997) {
    const auto count = std::upper_bound(want.begin(), want.end(), n) - want.begin();
    ASSERT_EQ(t.pi(n), static_cast<std::uint64_t>(count)) << n;
  }
}

TEST(Sieve, MillionCount) {
  EXPECT_EQ(build_sieve(1'000'000).pi(1'000'000), 78498u);
  EXPECT_EQ(trial_division_primes(1'000'000).size(), 78498u);
}

TEST(Sieve, RejectsBadLimits) {
  EXPECT_THROW(build_sieve(1), RangeError);
  EXPECT_THROW(build_sieve(kMaxSieveLimit + 1), RangeError);
  EXPECT_THROW(build_sieve(100'000'000, SieveOptions{.memory_budget_bytes = 1000}), RangeError);
}

TEST(Sieve, BillionAgainstIndependentSieveAndQuadSum) {
  constexpr std::uint64_t n = 1'000'000'000;
  const auto t = build_sieve(n);
  const auto naive = naive_odd_sieve(n);

  // Each logl is good to ~1e-19 relative; the running sum is kept in binary128
  // so 5e7 additions cost nothing at the 1e-6 tolerance.
  std::uint64_t count = 1;  // the prime 2
  __float128 theta = std::log(2.0L);
  for (std::uint64_t i = 1; i < naive.size(); ++i) {
    if (!naive[i]) {
      ++count;
      theta += std::log(static_cast<long double>(2 * i + 1));
    }
  }
  EXPECT_EQ(t.pi(n), count);
  EXPECT_EQ(count, 50847534u);
  EXPECT_LE(std::fabs(t.theta(n) - static_cast<Real>(theta)), 1e-6L);
  const auto cv = chebyshev(t, 1e9L + 0.5L);
  EXPECT_EQ(cv.pi, count);
  EXPECT_LE(std::fabs(cv.theta - static_cast<Real>(theta)), 1e-6L);
}

TEST(Sieve, StreamingCountMatchesTables) {
  const auto& t = tables_1e8();
  std::vector<std::uint64_t> points = {0, 1, 2, 3, 10, 99, 100, 12345678, 99999999, 100000000};
  const auto counts = count_primes_streaming(points, {}, 1 << 16);
  for (std::size_t i = 0; i < points.size(); ++i) EXPECT_EQ(counts[i], t.pi(points[i])) << points[i];
  std::vector<std::uint64_t> bad = {10, 5};
  EXPECT_THROW(count_primes_streaming(bad), DomainError);
}

TEST(Chebyshev, AtTen) {
  const auto t = build_sieve(100);
  const auto c = chebyshev(t, 10);
  EXPECT_NEAR(static_cast<double>(c.theta), std::log(210.0), 1e-15);
  EXPECT_NEAR(static_cast<double>(c.psi), std::log(210.0) + std::log(12.0), 1e-15);
  EXPECT_EQ(c.pi, 4u);
}

TEST(Chebyshev, BelowFirstPrime) {
  const auto t = build_sieve(100);
  const auto c = chebyshev(t, 1.5L);
  EXPECT_EQ(c.theta, 0);
  EXPECT_EQ(c.psi, 0);
  EXPECT_EQ(c.pi, 0u);
}

TEST(Chebyshev, RealArgumentUsesFloor) {
  const auto t = build_sieve(100);
  EXPECT_EQ(chebyshev(t, 10.99L).pi, 4u);
  EXPECT_EQ(chebyshev(t, 11).pi, 5u);
}

TEST(Chebyshev, CoverageError) {
  const auto t = build_sieve(1000);
  EXPECT_THROW(chebyshev(t, 1001), CoverageError);
  EXPECT_THROW(t.pi(1001), CoverageError);
  EXPECT_NO_THROW(chebyshev(t, 1000.5L));
}

TEST(Chebyshev, PrimePowerGapAt1e8) {
  const Real x = 1e8L;
  const auto c = chebyshev(tables_1e8(), x);
  EXPECT_LE(c.psi - c.theta, (1 + 1.47e-7L) * std::sqrt(x) + 1.78L * std::cbrt(x));
}

TEST(Chebyshev, IntegerRoot) {
  EXPECT_EQ(integer_root(0, 2), 0u);
  EXPECT_EQ(integer_root(99, 2), 9u);
  EXPECT_EQ(integer_root(100, 2), 10u);
  EXPECT_EQ(integer_root(UINT64_MAX, 2), 4294967295u);
  EXPECT_EQ(integer_root(UINT64_MAX, 64), 1u);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t n = rng() >> (rng() % 60);
    const unsigned m = 2 + rng() % 10;
    const std::uint64_t r = integer_root(n, m);
    ASSERT_LE(std::pow(static_cast<long double>(r), m), static_cast<long double>(n));
    ASSERT_GT(std::pow(static_cast<long double>(r + 1), m), static_cast<long double>(n));
  }
}

TEST(ChebyshevProperties, ThetaJumpsExactlyAtPrimes) {
  const auto t = build_sieve(100000, SieveOptions{.checkpoint_interval = 4096});
  Real prev = 0;
  for (std::uint64_t n = 2; n <= 100000; ++n) {
    const Real th = t.theta(n);
    if (t.is_prime(n)) {
      ASSERT_NEAR(static_cast<double>(th - prev), std::log(static_cast<double>(n)), 1e-9) << n;
    } else {
      ASSERT_EQ(th, prev) << n;
    }
    prev = th;
  }
  // Across the default checkpoint spacing of the large tables.
  const auto& big = tables_1e8();
  for (std::uint64_t c = 1; c * big.checkpoint_interval() <= big.limit(); c += 97) {
    const std::uint64_t n = c * big.checkpoint_interval();
    for (std::uint64_t m = n - 3; m <= std::min(n + 3, big.limit()); ++m) {
      if (!big.is_prime(m)) {
        ASSERT_EQ(big.theta(m), big.theta(m - 1)) << m;
      }
    }
  }
}

TEST(ChebyshevProperties, MonotoneAndOrderedOnGrid) {
  const auto& t = tables_1e8();
  ChebyshevValues prev{0, 0, 0};
  for (const auto x : log_grid(2, 1e8L)) {
    const auto c = chebyshev(t, x);
    ASSERT_LE(c.theta, c.psi) << x;
    ASSERT_GE(c.theta, prev.theta) << x;
    ASSERT_GE(c.psi, prev.psi) << x;
    ASSERT_GE(c.pi, prev.pi) << x;
    const Real xr = x;
    ASSERT_LE(c.psi - c.theta, (1 + 1.47e-7L) * std::sqrt(xr) + 1.78L * std::cbrt(xr)) << x;
    prev = c;
  }
}

TEST(ChebyshevProperties, SquareRootBoundOnGrid) {
  const auto& t = tables_1e8();
  const Real eight_pi = 8 * std::acos(-1.0L);
  for (const auto x : log_grid(600, 1e8L)) {
    const Real xr = x;
    const Real l = std::log(xr);
    ASSERT_LE(std::fabs(t.theta(x) - xr), std::sqrt(xr) / eight_pi * l * l) << x;
  }
}

TEST(ChebyshevProperties, HalfOverLogBoundOnGrid) {
  const auto& t = tables_1e8();
  for (const auto x : log_grid(563, 1e8L)) {
    const Real xr = x;
    ASSERT_LE(std::fabs(t.theta(x) - xr), xr / (2 * std::log(xr))) << x;
  }
}

TEST(SieveCache, RoundTripAndCorruption) {
  const auto dir = std::filesystem::temp_directory_path() / "pnt_sieve_cache_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "tables.bin";
  const auto t = build_sieve(1'000'000);
  save_sieve_cache(t, path);
  const auto back = load_sieve_cache(path);
  EXPECT_EQ(back.limit(), t.limit());
  EXPECT_EQ(back.pi(1'000'000), 78498u);
  EXPECT_EQ(back.theta(999'999), t.theta(999'999));

  std::string bytes;
  {
    std::ifstream in(path, std::ios::binary);
    bytes.assign(std::istreambuf_iterator<char>(in), {});
  }
  auto write = [&](const std::string& b) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(b.data(), static_cast<std::streamsize>(b.size()));
  };
  std::string flipped = bytes;
  flipped[bytes.size() / 2] ^= 0x10;
  write(flipped);
  EXPECT_THROW(load_sieve_cache(path), ParseError);
  write(bytes.substr(0, bytes.size() - 3));
  EXPECT_THROW(load_sieve_cache(path), ParseError);
  std::string bad_magic = bytes;
  bad_magic[0] = 'X';
  write(bad_magic);
  EXPECT_THROW(load_sieve_cache(path), ParseError);
  std::filesystem::remove_all(dir);
}

namespace {

using oracle::F;

// Per-gap closed form in 50 digits: on [lo, hi) theta is constant and
// int theta / (t log^2 t) = theta (1/log lo - 1/log hi).
F deficit_oracle(const SieveTables& t, std::uint64_t a, std::uint64_t b, bool absolute) {
  auto piece = [](const F& th, const F& lo, const F& hi) {
    return th * (1 / log(lo) - 1 / log(hi)) - oracle::inv_log_sq(lo, hi);
  };
  std::vector<std::uint64_t> cuts{a};
  for (const auto p : t.primes_in(a + 1, b - 1)) cuts.push_back(p);
  cuts.push_back(b);
  F theta = 0;
  for (const auto p : t.primes_in(2, a)) theta += log(F(p));
  F sum = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (i > 0) theta += log(F(cuts[i]));
    const F lo = cuts[i], hi = cuts[i + 1];
    if (!absolute) {
      sum += piece(theta, lo, hi);
    } else if (theta > lo && theta < hi) {
      sum += abs(piece(theta, lo, theta)) + abs(piece(theta, theta, hi));
    } else {
      sum += abs(piece(theta, lo, hi));
    }
  }
  return sum;
}

}  // namespace

TEST(ThetaDeficit, EmptyRange) {
  const auto t = build_sieve(1000);
  const auto v = theta_deficit_integral(t, 100, 100);
  EXPECT_TRUE(v.lower().is_zero());
  EXPECT_TRUE(v.upper().is_zero());
}

TEST(ThetaDeficit, ExactRangeAgainstPerGapOracle) {
  const auto t = build_sieve(1000);
  const auto s = theta_deficit_integral(t, 2, 563);
  const auto a = theta_deficit_abs_integral(t, 2, 563);
  const Real s_want = static_cast<Real>(deficit_oracle(t, 2, 563, false));
  const Real a_want = static_cast<Real>(deficit_oracle(t, 2, 563, true));
  EXPECT_TRUE(s.contains(LogScalar::from_real(s_want))) << to_string(s, 12) << " " << static_cast<double>(s_want);
  EXPECT_TRUE(a.contains(LogScalar::from_real(a_want))) << to_string(a, 12) << " " << static_cast<double>(a_want);
  EXPECT_LE(s.width().to_real(), 1e-6L);
  EXPECT_LE(a.width().to_real(), 1e-6L);
  EXPECT_LE(a.upper().to_real() + 2 / std::log(2.0L), 7.6L);
  EXPECT_NEAR(static_cast<double>(a_want), 4.6387, 1e-4);
}

TEST(ThetaDeficit, MidRangeWithinHalfInverseLogCubed) {
  const auto& t = tables_1e8();
  const auto v = theta_deficit_abs_integral(t, 563, 1e6);
  const auto cap = bound_inv_log_power_integral(std::log(563.0L), std::log(1e6L), 3, Direction::upper).to_real() / 2;
  EXPECT_LE(v.upper().to_real(), cap);
  const auto s = theta_deficit_integral(t, 563, 1e6);
  EXPECT_LE(std::fabs(s.lower().to_real()), cap);
  EXPECT_LE(std::fabs(s.upper().to_real()), cap);
}

TEST(ThetaDeficit, RejectsOutsideCoverage) {
  const auto t = build_sieve(1000);
  EXPECT_THROW(theta_deficit_integral(t, 2, 2000), CoverageError);
  EXPECT_THROW(theta_deficit_integral(t, 1, 100), DomainError);
  EXPECT_THROW(theta_deficit_integral(t, 100, 50), DomainError);
}
