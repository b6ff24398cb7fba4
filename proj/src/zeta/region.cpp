#include "pnt/zeta/region.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pnt/error.hpp"

namespace pnt::zeta {

void ZeroFreeRegion::validate() const {
  if (!(R > 0) || !std::isfinite(R)) throw DomainError("zero-free region constant R must be positive");
}

void RhHeight::validate() const {
  if (!(H > 0) || H > kVerified) throw DomainError("RH height must lie in (0, 3e12]");
}

Real eta(Real t, const ZeroFreeRegion& region) {
  region.validate();
  if (!(t >= 3)) throw DomainError("eta: zero-free region is only asserted for t >= 3, got " + std::to_string(t));
  return 1 / (region.R * std::log(t));
}

SumBound recip_gamma_sum_bound(Real T) {
  constexpr Real two_pi = 2 * std::numbers::pi_v<Real>;
  if (!(T >= two_pi * std::numbers::e_v<Real>)) throw DomainError("recip_gamma_sum_bound: need T >= 2 pi e");
  const Real l = std::log(T / two_pi);
  return {l * l / (4 * std::numbers::pi_v<Real>), kRecipGammaSumRadius};
}

}  // namespace pnt::zeta
