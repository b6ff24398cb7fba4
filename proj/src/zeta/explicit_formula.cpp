#include "pnt/zeta/explicit_formula.hpp"

#include <cmath>
#include <string>

#include "pnt/error.hpp"

namespace pnt::zeta {

ResidualReport explicit_formula_residual(const ZeroCatalog& catalog, const primes::SieveTables& tables, Real x,
                                         Real T) {
  if (!(std::fmod(2 * x, 2) == 1)) throw DomainError("explicit_formula_residual: x must be half an odd integer");
  if (!(T > 50 && T < x)) throw DomainError("explicit_formula_residual: need 50 < T < x");
  if (T > catalog.covered_height()) {
    throw CoverageError("explicit_formula_residual: zeros needed up to " + std::to_string(static_cast<double>(T)));
  }
  const Real psi = tables.psi(static_cast<std::uint64_t>(std::floor(x)));
  const Real log_x = std::log(x);
  const Real root_x = std::sqrt(x);

  // Each conjugate pair contributes 2 Re(x^rho / rho) with rho = 1/2 + i gamma.
  const std::size_t n = catalog.count_up_to(T);
  const auto gammas = catalog.gammas();
  Real sum = 0, comp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Real g = gammas[i];
    const Real phi = g * log_x;
    const Real term = 2 * root_x * (std::cos(phi) / 2 + g * std::sin(phi)) / (0.25L + g * g);
    const Real t = sum + term;
    comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  const Real zero_sum = sum + comp;
  return {x,
          T,
          psi,
          zero_sum,
          std::fabs(psi - x + zero_sum),
          2 * x * log_x * log_x / T,
          n,
          log_x > 60};
}

}  // namespace pnt::zeta
