#include "pnt/primes/theta_deficit.hpp"

#include <cmath>
#include <string>

#include "pnt/error.hpp"
#include "pnt/numerics/quadrature.hpp"

namespace pnt::primes {

namespace {

const Integrand kInvLogSquared{[](Real t) {
                                 const Real l = std::log(t);
                                 return 1 / (l * l);
                               },
                               Shape::convex,
                               {}};

void check_range(const SieveTables& tables, Real a, Real b) {
  if (!(a >= 2) || !(a <= b)) throw DomainError("theta deficit integral: need 2 <= a <= b");
  if (b > static_cast<Real>(tables.limit())) {
    throw CoverageError("theta deficit integral: b beyond sieve limit " + std::to_string(tables.limit()));
  }
}

// Compensated accumulator that also tracks the sum of magnitudes, from which
// the rounding error of the whole sum is bounded.
struct Accumulator {
  Real sum = 0, comp = 0, mass = 0;
  void add(Real x) {
    const Real t = sum + x;
    comp += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
    mass += std::fabs(x);
  }
  Real value() const { return sum + comp; }
  Real error() const { return 64 * kRealEpsilon * mass; }
};

// Walks the constant pieces of theta on [a, b]: f(lo, hi, theta).
template <class F>
void for_each_piece(const SieveTables& tables, Real a, Real b, F&& f) {
  const auto first = static_cast<std::uint64_t>(std::floor(a));
  Accumulator theta;
  theta.add(tables.theta(first));
  Real lo = a;
  tables.for_each_prime(first + 1, static_cast<std::uint64_t>(std::floor(b)), [&](std::uint64_t p) {
    const auto hi = static_cast<Real>(p);
    if (hi > lo) f(lo, hi, theta.value());
    theta.add(std::log(hi));
    lo = hi;
  });
  if (b > lo) f(lo, b, theta.value());
}

}  // namespace

DirectedValue theta_deficit_integral(const SieveTables& tables, Real a, Real b) {
  check_range(tables, a, b);
  if (a == b) return DirectedValue::exact(0);
  Accumulator closed;
  for_each_piece(tables, a, b, [&](Real lo, Real hi, Real theta) {
    closed.add(theta * (1 / std::log(lo) - 1 / std::log(hi)));
  });
  const Real s = closed.value();
  const Real e = closed.error();
  const auto quad = adaptive_quad(kInvLogSquared, a, b, 1e-7L);
  quad.require_converged();
  return DirectedValue::from_reals(s - e, s + e) - quad.enclosure;
}

DirectedValue theta_deficit_abs_integral(const SieveTables& tables, Real a, Real b) {
  check_range(tables, a, b);
  if (a == b) return DirectedValue::exact(0);
  Accumulator lower, upper;
  const Real tol_per_length = 1e-7L / (b - a);
  // On [lo, hi] with theta constant and of fixed sign of theta - t:
  //   int (theta - t) / (t log^2 t) = theta (1/log lo - 1/log hi) - int dt / log^2 t.
  auto piece = [&](Real lo, Real hi, Real theta, bool above) {
    const Real closed = theta * (1 / std::log(lo) - 1 / std::log(hi));
    const auto q = adaptive_quad(kInvLogSquared, lo, hi, tol_per_length * (hi - lo));
    q.require_converged();
    if (above) {
      lower.add(closed - q.upper());
      upper.add(closed - q.lower());
    } else {
      lower.add(q.lower() - closed);
      upper.add(q.upper() - closed);
    }
  };
  for_each_piece(tables, a, b, [&](Real lo, Real hi, Real theta) {
    if (theta >= hi) {
      piece(lo, hi, theta, true);
    } else if (theta <= lo) {
      piece(lo, hi, theta, false);
    } else {
      piece(lo, theta, theta, true);
      piece(theta, hi, theta, false);
    }
  });
  const Real e = std::max(lower.error(), upper.error());
  return DirectedValue::from_reals(std::max<Real>(0, lower.value() - e), upper.value() + e);
}

}  // namespace pnt::primes
