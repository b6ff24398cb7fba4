#pragma once

#include "pnt/numerics/directed.hpp"
#include "pnt/primes/sieve.hpp"

namespace pnt::primes {

// Enclosure of int_a^b (theta(t) - t) / (t log^2 t) dt. On each prime gap
// theta is constant and theta / (t log^2 t) integrates to -theta / log t;
// the remaining -int dt / log^2 t is enclosed by adaptive quadrature.
// Width <= 1e-6. Requires 2 <= a <= b <= limit.
DirectedValue theta_deficit_integral(const SieveTables& tables, Real a, Real b);

// Same with |theta(t) - t| in the numerator; each gap is split where
// theta(t) - t changes sign.
DirectedValue theta_deficit_abs_integral(const SieveTables& tables, Real a, Real b);

}  // namespace pnt::primes
