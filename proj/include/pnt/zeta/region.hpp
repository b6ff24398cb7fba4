#pragma once

#include "pnt/numerics/real.hpp"

namespace pnt::zeta {

/// Classical zero-free region sigma >= 1 - 1/(R log t), valid for t >= 3.
struct ZeroFreeRegion {
  static constexpr Real kDefaultR = 5.573412L;
  Real R = kDefaultR;

  // Throws DomainError unless R > 0.
  void validate() const;
};

/// Height below which every nontrivial zero is known to lie on the
/// critical line.
struct RhHeight {
  static constexpr Real kVerified = 3e12L;
  Real H = kVerified;

  // Throws DomainError unless 0 < H <= 3e12.
  void validate() const;
};

// Width of the zero-free region at height t: 1 / (R log t). Throws
// DomainError for t < 3, where the region is not asserted.
Real eta(Real t, const ZeroFreeRegion& region = {});

// Sum over 0 < gamma <= T of 1/gamma lies in center +- radius.
struct SumBound {
  Real center;
  Real radius;
};

inline constexpr Real kRecipGammaSumRadius = 0.9321L;

// center = log^2(T / 2pi) / (4pi), radius 0.9321. Requires T >= 2 pi e.
SumBound recip_gamma_sum_bound(Real T);

}  // namespace pnt::zeta
