#include "pnt/primes/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <string>

#include "pnt/error.hpp"

namespace pnt::primes {

namespace {

// Odd primes up to n by a plain sieve; used as the segment base.
std::vector<std::uint32_t> odd_primes_up_to(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  if (n < 3) return out;
  std::vector<char> composite(n + 1, 0);
  for (std::uint64_t i = 3; i * i <= n; i += 2) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= n; j += 2 * i) composite[j] = 1;
  }
  for (std::uint64_t i = 3; i <= n; i += 2) {
    if (!composite[i]) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

// seg[j] == 1 iff 2(first + j) + 1 is prime, for j < len.
void sieve_segment(std::uint64_t first, std::size_t len, std::span<const std::uint32_t> base,
                   std::vector<std::uint8_t>& seg) {
  seg.assign(len, 1);
  const std::uint64_t lo = 2 * first + 1;
  const std::uint64_t hi = 2 * (first + len - 1) + 1;
  for (const std::uint64_t p : base) {
    const std::uint64_t p2 = p * p;
    if (p2 > hi) break;
    std::uint64_t start = std::max(p2, (lo + p - 1) / p * p);
    if (start % 2 == 0) start += p;
    for (std::uint64_t j = (start - 1) / 2 - first; j < len; j += p) seg[j] = 0;
  }
  if (first == 0) seg[0] = 0;  // 1 is not prime
}

std::uint64_t odd_index(std::uint64_t n) { return (n - 1) / 2; }

void neumaier_add(Real& sum, Real& comp, Real x) {
  const Real t = sum + x;
  if (std::fabs(sum) >= std::fabs(x)) {
    comp += (sum - t) + x;
  } else {
    comp += (x - t) + sum;
  }
  sum = t;
}

// base^m, saturating at cap + 1 (held in 128 bits so cap may be UINT64_MAX).
unsigned __int128 checked_pow(std::uint64_t base, unsigned m, std::uint64_t cap) {
  unsigned __int128 r = 1;
  for (unsigned i = 0; i < m; ++i) {
    r *= base;
    if (r > cap) return static_cast<unsigned __int128>(cap) + 1;
  }
  return r;
}

constexpr char kCacheMagic[8] = {'P', 'N', 'T', 'S', 'I', 'E', 'V', 'E'};
constexpr std::uint32_t kCacheVersion = 1;

std::uint64_t fnv1a(const unsigned char* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (std::size_t i = 0; i < n; ++i) {
    h ^= data[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t integer_root(std::uint64_t n, unsigned m) {
  if (m == 0) throw DomainError("integer_root: zeroth root");
  if (m == 1 || n < 2) return n;
  auto r = static_cast<std::uint64_t>(std::pow(static_cast<long double>(n), 1.0L / m));
  while (r > 0 && checked_pow(r, m, n) > n) --r;
  while (checked_pow(r + 1, m, n) <= n) ++r;
  return r;
}

SieveTables build_sieve(std::uint64_t limit, const SieveOptions& opts) {
  if (limit < 2 || limit > kMaxSieveLimit) {
    throw RangeError("build_sieve: limit " + std::to_string(limit) + " outside [2, 1e11]");
  }
  if (opts.segment_odds == 0 || opts.checkpoint_interval < 2) throw DomainError("build_sieve: bad options");
  const std::uint64_t n_odds = (limit + 1) / 2;
  const std::uint64_t words = (n_odds + 63) / 64;
  if (words * 8 > opts.memory_budget_bytes) {
    throw RangeError("build_sieve: bitmap for limit " + std::to_string(limit) + " needs " +
                     std::to_string(words * 8) + " bytes, over the memory budget; use streaming counts");
  }

  SieveTables t;
  t.limit_ = limit;
  t.interval_ = opts.checkpoint_interval;
  t.bits_.assign(words, 0);

  const auto base = odd_primes_up_to(integer_root(limit, 2));
  std::vector<std::uint8_t> seg;
  // Segments are processed and merged in index order.
  for (std::uint64_t first = 0; first < n_odds; first += opts.segment_odds) {
    const std::size_t len = static_cast<std::size_t>(std::min<std::uint64_t>(opts.segment_odds, n_odds - first));
    sieve_segment(first, len, base, seg);
    for (std::size_t j = 0; j < len; ++j) {
      if (seg[j]) {
        const std::uint64_t i = first + j;
        t.bits_[i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }
  t.rebuild_checkpoints();
  return t;
}

// theta at checkpoint c is held as an unevaluated pair hi + lo. A query adds
// the compensated sum S of log p over its partial block and returns
// hi + (lo + S); the next checkpoint is the exact two-sum of the same
// expression with S over the full block. Queries on either side of a
// checkpoint therefore round identically, and theta is an exact step
// function: constant between primes, strictly rising at each prime.
void SieveTables::rebuild_checkpoints() {
  const std::uint64_t n_cp = limit_ / interval_ + 1;
  pi_at_.assign(n_cp, 0);
  theta_hi_.assign(n_cp, 0);
  theta_lo_.assign(n_cp, 0);
  for (std::uint64_t c = 0; c + 1 < n_cp; ++c) {
    const std::uint64_t lo = c * interval_ + 1;
    const std::uint64_t hi = (c + 1) * interval_;
    std::uint64_t count = 0;
    const Real t = theta_lo_[c] + block_log_sum(lo, hi, &count);
    const Real s = theta_hi_[c] + t;
    const Real bb = s - theta_hi_[c];
    theta_hi_[c + 1] = s;
    theta_lo_[c + 1] = (theta_hi_[c] - (s - bb)) + (t - bb);
    pi_at_[c + 1] = pi_at_[c] + count;
  }
}

Real SieveTables::block_log_sum(std::uint64_t lo, std::uint64_t hi, std::uint64_t* count) const {
  Real sum = 0, comp = 0;
  std::uint64_t k = 0;
  for_each_prime(lo, hi, [&](std::uint64_t p) {
    neumaier_add(sum, comp, std::log(static_cast<Real>(p)));
    ++k;
  });
  if (count) *count = k;
  return sum + comp;
}

void SieveTables::check_coverage(std::uint64_t n) const {
  if (n > limit_) {
    throw CoverageError("sieve query at " + std::to_string(n) + " beyond sieve limit " + std::to_string(limit_));
  }
}

bool SieveTables::is_prime(std::uint64_t n) const {
  check_coverage(n);
  if (n == 2) return true;
  if (n < 2 || n % 2 == 0) return false;
  const std::uint64_t i = odd_index(n);
  return (bits_[i / 64] >> (i % 64)) & 1U;
}

void SieveTables::for_each_prime(std::uint64_t lo, std::uint64_t hi,
                                 const std::function<void(std::uint64_t)>& f) const {
  if (hi < lo) return;
  check_coverage(hi);
  if (lo <= 2 && 2 <= hi) f(2);
  const std::uint64_t start = std::max<std::uint64_t>(lo, 3);
  if (start > hi) return;
  std::uint64_t i = odd_index(start | 1);
  if ((start | 1) > hi) return;
  const std::uint64_t last = odd_index(hi % 2 ? hi : hi - 1);
  while (i <= last) {
    std::uint64_t w = bits_[i / 64] >> (i % 64);
    const std::uint64_t word_end = std::min(last, (i / 64) * 64 + 63);
    const std::uint64_t span = word_end - i + 1;
    if (span < 64) w &= (std::uint64_t{1} << span) - 1;
    while (w) {
      const int b = std::countr_zero(w);
      f(2 * (i + static_cast<std::uint64_t>(b)) + 1);
      w &= w - 1;
    }
    i = word_end + 1;
  }
}

std::vector<std::uint64_t> SieveTables::primes_in(std::uint64_t lo, std::uint64_t hi) const {
  std::vector<std::uint64_t> out;
  for_each_prime(lo, hi, [&](std::uint64_t p) { out.push_back(p); });
  return out;
}

std::uint64_t SieveTables::pi(std::uint64_t n) const {
  check_coverage(n);
  const std::uint64_t c = n / interval_;
  std::uint64_t count = pi_at_[c];
  const std::uint64_t from = c * interval_ + 1;
  if (from > n) return count;
  if (from <= 2 && 2 <= n) ++count;
  const std::uint64_t start = std::max<std::uint64_t>(from, 3) | 1;
  if (start > n) return count;
  std::uint64_t i = odd_index(start);
  const std::uint64_t last = odd_index(n % 2 ? n : n - 1);
  while (i <= last) {
    std::uint64_t w = bits_[i / 64] >> (i % 64);
    const std::uint64_t word_end = std::min(last, (i / 64) * 64 + 63);
    const std::uint64_t span = word_end - i + 1;
    if (span < 64) w &= (std::uint64_t{1} << span) - 1;
    count += static_cast<std::uint64_t>(std::popcount(w));
    i = word_end + 1;
  }
  return count;
}

Real SieveTables::theta(std::uint64_t n) const {
  check_coverage(n);
  const std::uint64_t c = n / interval_;
  const std::uint64_t from = c * interval_ + 1;
  const Real partial = from <= n ? block_log_sum(from, n, nullptr) : 0;
  return theta_hi_[c] + (theta_lo_[c] + partial);
}

Real SieveTables::psi(std::uint64_t n) const {
  check_coverage(n);
  Real sum = 0;
  for (unsigned m = 1;; ++m) {
    const std::uint64_t r = integer_root(n, m);
    if (r < 2) break;
    sum += theta(r);
  }
  return sum;
}

ChebyshevValues chebyshev(const SieveTables& tables, Real x) {
  if (!std::isfinite(x)) throw DomainError("chebyshev: non-finite x");
  if (x < 2) return {0, 0, 0};
  if (x > static_cast<Real>(tables.limit()) + 1) {
    throw CoverageError("chebyshev: x beyond sieve limit " + std::to_string(tables.limit()));
  }
  const auto n = static_cast<std::uint64_t>(std::floor(x));
  return {tables.theta(n), tables.psi(n), tables.pi(n)};
}

std::vector<std::uint64_t> count_primes_streaming(std::span<const std::uint64_t> points,
                                                  const std::function<void(std::uint64_t)>& progress,
                                                  std::size_t segment_odds) {
  if (!std::is_sorted(points.begin(), points.end())) throw DomainError("count_primes_streaming: points not ascending");
  std::vector<std::uint64_t> out(points.size(), 0);
  if (points.empty() || points.back() < 2) return out;
  const std::uint64_t top = points.back();
  if (top > kMaxSieveLimit) throw RangeError("count_primes_streaming: beyond 1e11");
  const auto base = odd_primes_up_to(integer_root(top, 2));
  const std::uint64_t n_odds = (top + 1) / 2;

  std::size_t next = 0;
  while (next < points.size() && points[next] < 2) ++next;
  std::uint64_t before = 1;  // the prime 2
  std::vector<std::uint8_t> seg;
  for (std::uint64_t first = 0; first < n_odds && next < points.size(); first += segment_odds) {
    const std::size_t len = static_cast<std::size_t>(std::min<std::uint64_t>(segment_odds, n_odds - first));
    sieve_segment(first, len, base, seg);
    const std::uint64_t seg_hi = 2 * (first + len - 1) + 1;
    // odd_index floors even points onto the odd number below them.
    while (next < points.size() && odd_index(points[next]) < first + len) {
      const std::uint64_t upto = odd_index(points[next]);
      const auto k = static_cast<std::ptrdiff_t>(upto - first + 1);
      out[next] = before + static_cast<std::uint64_t>(std::count(seg.begin(), seg.begin() + k, std::uint8_t{1}));
      ++next;
    }
    before += static_cast<std::uint64_t>(std::count(seg.begin(), seg.end(), std::uint8_t{1}));
    if (progress) progress(seg_hi);
  }
  return out;
}

void save_sieve_cache(const SieveTables& tables, const std::filesystem::path& path) {
  std::string buf;
  auto put = [&](const void* p, std::size_t n) { buf.append(static_cast<const char*>(p), n); };
  put(kCacheMagic, sizeof kCacheMagic);
  put(&kCacheVersion, sizeof kCacheVersion);
  put(&tables.limit_, sizeof tables.limit_);
  put(&tables.interval_, sizeof tables.interval_);
  const std::uint64_t words = tables.bits_.size();
  put(&words, sizeof words);
  put(tables.bits_.data(), words * sizeof(std::uint64_t));
  const std::uint64_t sum = fnv1a(reinterpret_cast<const unsigned char*>(buf.data()), buf.size());
  put(&sum, sizeof sum);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("save_sieve_cache: cannot open " + path.string());
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw Error("save_sieve_cache: write failed for " + path.string());
}

SieveTables load_sieve_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("load_sieve_cache: cannot open " + path.string());
  const std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t pos = 0;
  auto get = [&](void* p, std::size_t n) {
    if (pos + n > buf.size()) throw ParseError("load_sieve_cache: truncated file " + path.string());
    std::memcpy(p, buf.data() + pos, n);
    pos += n;
  };
  char magic[8];
  get(magic, sizeof magic);
  if (std::memcmp(magic, kCacheMagic, sizeof magic) != 0) throw ParseError("load_sieve_cache: bad magic");
  std::uint32_t version = 0;
  get(&version, sizeof version);
  if (version != kCacheVersion) {
    throw ParseError("load_sieve_cache: unsupported version " + std::to_string(version));
  }
  SieveTables t;
  std::uint64_t words = 0;
  get(&t.limit_, sizeof t.limit_);
  get(&t.interval_, sizeof t.interval_);
  get(&words, sizeof words);
  if (t.limit_ < 2 || t.limit_ > kMaxSieveLimit || t.interval_ < 2 || words != ((t.limit_ + 1) / 2 + 63) / 64) {
    throw ParseError("load_sieve_cache: inconsistent header");
  }
  t.bits_.resize(words);
  get(t.bits_.data(), words * sizeof(std::uint64_t));
  const std::uint64_t expect = fnv1a(reinterpret_cast<const unsigned char*>(buf.data()), pos);
  std::uint64_t sum = 0;
  get(&sum, sizeof sum);
  if (sum != expect || pos != buf.size()) throw ParseError("load_sieve_cache: checksum mismatch");
  t.rebuild_checkpoints();
  return t;
}

}  // namespace pnt::primes
