#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <vector>

#include "pnt/numerics/real.hpp"

namespace pnt::primes {

struct SieveOptions {
  // Odd numbers per segment.
  std::size_t segment_odds = std::size_t{1} << 20;
  // Spacing of the stored (pi, theta) checkpoints.
  std::uint64_t checkpoint_interval = std::uint64_t{1} << 16;
  // Upper bound on the resident prime bitmap (limit / 16 bytes).
  std::size_t memory_budget_bytes = std::size_t{2} << 30;
};

inline constexpr std::uint64_t kMaxSieveLimit = 100'000'000'000ULL;

/// Odd-only prime bitmap up to `limit` with checkpointed pi and theta.
///
/// theta at each checkpoint is a compensated pair built block by block, so a
/// query costs one checkpoint lookup plus at most `checkpoint_interval / 2`
/// bit probes. Immutable after construction; queries are thread-safe.
class SieveTables {
 public:
  std::uint64_t limit() const { return limit_; }
  std::uint64_t checkpoint_interval() const { return interval_; }

  bool is_prime(std::uint64_t n) const;
  std::uint64_t pi(std::uint64_t n) const;
  Real theta(std::uint64_t n) const;
  Real psi(std::uint64_t n) const;

  // Calls f(p) for each prime lo <= p <= hi in ascending order.
  void for_each_prime(std::uint64_t lo, std::uint64_t hi, const std::function<void(std::uint64_t)>& f) const;
  std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) const;

 private:
  friend SieveTables build_sieve(std::uint64_t, const SieveOptions&);
  friend SieveTables load_sieve_cache(const std::filesystem::path&);
  friend void save_sieve_cache(const SieveTables&, const std::filesystem::path&);

  void check_coverage(std::uint64_t n) const;
  void rebuild_checkpoints();
  Real block_log_sum(std::uint64_t lo, std::uint64_t hi, std::uint64_t* count) const;

  std::uint64_t limit_ = 0;
  std::uint64_t interval_ = 0;
  // Bit i set iff 2i + 1 is prime.
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint64_t> pi_at_;
  std::vector<Real> theta_hi_;
  std::vector<Real> theta_lo_;
};

// Segmented sieve of Eratosthenes. Requires 2 <= limit <= 1e11 and a bitmap
// within the memory budget; throws RangeError otherwise.
SieveTables build_sieve(std::uint64_t limit, const SieveOptions& opts = {});

struct ChebyshevValues {
  Real theta;
  Real psi;
  std::uint64_t pi;
};

// theta, psi and pi at floor(x). Throws CoverageError beyond the limit.
ChebyshevValues chebyshev(const SieveTables& tables, Real x);

// floor(n^(1/m)) computed exactly.
std::uint64_t integer_root(std::uint64_t n, unsigned m);

// pi(x) for each x in `points` (ascending) by a segmented pass that keeps
// only one segment resident. `progress`, if set, receives the current
// sieved height after each segment.
std::vector<std::uint64_t> count_primes_streaming(std::span<const std::uint64_t> points,
                                                  const std::function<void(std::uint64_t)>& progress = {},
                                                  std::size_t segment_odds = std::size_t{1} << 21);

// Binary cache: magic, format version, limit, checkpoint interval, bitmap,
// FNV-1a checksum of everything before it. Checkpoints are rebuilt on load.
void save_sieve_cache(const SieveTables& tables, const std::filesystem::path& path);
// Throws ParseError on a bad magic, version or checksum.
SieveTables load_sieve_cache(const std::filesystem::path& path);

}  // namespace pnt::primes
