#pragma once

#include <cstddef>

#include "pnt/numerics/real.hpp"
#include "pnt/primes/sieve.hpp"
#include "pnt/zeta/catalog.hpp"

namespace pnt::zeta {

struct ResidualReport {
  Real x;
  Real T;
  Real psi;
  // sum over 0 < gamma <= T of 2 Re(x^rho / rho), rho = 1/2 + i gamma
  Real zero_sum;
  // |psi(x) - x + zero_sum|
  Real residual;
  // The truncation budget 2 x log^2 x / T of the explicit formula.
  Real budget;
  std::size_t zeros_used;
  // The truncated explicit formula is only asserted for x > e^60. Below
  // that the residual is an empirical diagnostic, not a certified bound.
  bool hypothesis_met;
};

// Residual of the truncated explicit formula at a half-odd-integer x using
// exact psi(x) from the sieve. Requires 50 < T < x and T within catalog
// coverage; throws DomainError or CoverageError otherwise.
ResidualReport explicit_formula_residual(const ZeroCatalog& catalog, const primes::SieveTables& tables,
                                         Real x, Real T);

}  // namespace pnt::zeta
