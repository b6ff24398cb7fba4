#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <string>

#include "pnt/error.hpp"
#include "pnt/ramanujan/ramanujan.hpp"

namespace pnt::ramanujan {

namespace {

namespace mp = boost::multiprecision;

using Float50 = mp::cpp_bin_float_50;
using Float100 = mp::cpp_bin_float_100;

// floor(x / e), decided in 50-digit arithmetic; x / e is irrational so it is
// never within 1e-30 of an integer for x below 2^64.
std::uint64_t floor_over_e(std::uint64_t x) {
  const Float50 q = Float50(x) / mp::exp(Float50(1));
  const Float50 f = mp::floor(q);
  if (q - f < Float50("1e-30") || (f + 1) - q < Float50("1e-30")) {
    throw Error("floor(x / e) undecidable at 50 digits for x = " + std::to_string(x));
  }
  return f.convert_to<std::uint64_t>();
}

// Compares P^2 with e x Q / log x in type F whose relative accuracy on the
// right side is `rel`; indeterminate when the gap is within that error.
template <class F>
Verdict decide(std::uint64_t x, std::uint64_t P, std::uint64_t Q, const F& rel) {
  using std::exp, std::log, mp::exp, mp::log;
  const F lhs = F(P) * F(P);
  const F rhs = exp(F(1)) * F(x) * F(Q) / log(F(x));
  const F gap = rhs - lhs;
  const F tol = rel * rhs;
  if (gap > tol) return Verdict::holds;
  if (-gap > tol) return Verdict::fails;
  return Verdict::indeterminate;
}

SpotCheck decide_all(std::uint64_t x, std::uint64_t xe, std::uint64_t P, std::uint64_t Q) {
  SpotCheck s{x, xe, P, Q, Verdict::indeterminate, 0};
  // long double: ~19 digits; products of integers below 2^64 are exact up
  // to rounding of the single multiply, exp and log.
  s.verdict = decide<long double>(x, P, Q, 64 * kRealEpsilon);
  s.digits = 18;
  if (s.verdict != Verdict::indeterminate) return s;
  s.verdict = decide<Float50>(x, P, Q, Float50("1e-45"));
  s.digits = 50;
  if (s.verdict != Verdict::indeterminate) return s;
  s.verdict = decide<Float100>(x, P, Q, Float100("1e-95"));
  s.digits = 100;
  return s;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::indeterminate:
      return "indeterminate";
  }
  return "?";
}

SpotCheck inequality_spot_check(std::uint64_t x, const primes::SieveTables& tables) {
  const std::uint64_t xe = floor_over_e(x);
  if (xe < 2) throw DomainError("inequality_spot_check: need x / e >= 2");
  if (x > tables.limit()) {
    throw CoverageError("inequality_spot_check: x = " + std::to_string(x) + " beyond sieve limit " +
                        std::to_string(tables.limit()));
  }
  return decide_all(x, xe, tables.pi(x), tables.pi(xe));
}

SpotCheck inequality_spot_check_streaming(std::uint64_t x, const std::function<void(std::uint64_t)>& progress) {
  const std::uint64_t xe = floor_over_e(x);
  if (xe < 2) throw DomainError("inequality_spot_check: need x / e >= 2");
  const std::uint64_t points[] = {xe, x};
  const auto counts = primes::count_primes_streaming(points, progress);
  return decide_all(x, xe, counts[1], counts[0]);
}

}  // namespace pnt::ramanujan
