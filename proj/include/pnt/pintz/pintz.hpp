#pragma once

#include <limits>
#include <string>
#include <vector>

#include "pnt/numerics/log_scalar.hpp"
#include "pnt/zeta/density.hpp"
#include "pnt/zeta/region.hpp"

namespace pnt::pintz {

using zeta::ZeroDensityTable;
using zeta::ZeroFreeRegion;

// The engine's bounds assume log x0 >= 1000 (used to absorb the T^-1
// remainder of the zero count into the factor 2.0025).
inline constexpr Real kMinLogX0 = 1000;

// Exponent of (log x / R) in the error term: (5 - 2 sigma) / 2.
Real exponent_B(Real sigma);
// Exact coefficient of sqrt(log x / R) in the exponential: (16 sigma - 10) / 3.
Real exponent_exact(Real sigma);
// The same rounded down to two decimals (never exceeds the exact value).
Real exponent_C(Real sigma);

// 1 / [exp(((10 - 16 sigma)/3) u) u^(5 - 2 sigma)] with u = sqrt(L0 / R).
// Requires sigma in [0.75, 1) and L0 >= 1000.
LogScalar k_factor(Real sigma, Real L0, const ZeroFreeRegion& region = {});

// Correction terms of A beyond the x0-independent floor. C5 is linear in
// the density constant C2 and also reported per unit C2.
struct Corrections {
  LogScalar C3;
  LogScalar C4;
  LogScalar C5;
  LogScalar C5_coeff;
  LogScalar k;

  LogScalar sum() const;
};

Corrections pintz_constants(Real sigma, Real L0, const ZeroDensityTable& table, const ZeroFreeRegion& region = {});

// 2.0025 * 2^(5 - 2 sigma) * C1(sigma): the limit of A as L0 grows.
Real a_floor(Real sigma, const ZeroDensityTable& table);

// A(sigma, L0) = floor + C3 + C4 + C5.
Real big_A(Real sigma, Real L0, const ZeroDensityTable& table, const ZeroFreeRegion& region = {});

// A (L0/R)^B exp(-((16 sigma - 10)/3) sqrt(L0/R)) with the exact exponent.
LogScalar epsilon0(Real sigma, Real L0, const ZeroDensityTable& table, const ZeroFreeRegion& region = {});

// d/dL log of each correction term at L.
struct LogDerivatives {
  Real C3, C4, C5;
};
LogDerivatives correction_log_derivatives(Real sigma, Real L, const ZeroFreeRegion& region = {});

// A(sigma, L) decreasing for L > X: successive decrease of C3 + C4 + C5 on a
// 1000-point geometric grid over [X, 100 X], and every correction has a
// negative log-derivative at X.
bool a_is_decreasing(Real sigma, Real X, const ZeroDensityTable& table, const ZeroFreeRegion& region = {});

// Decimal scientific value m * 10^e with 1 <= m < 10.
struct Scientific {
  Real mantissa;
  int exp10;

  LogScalar value() const;
  std::string str() const;
};

Real round_up_decimals(Real v, int places);
Real round_down_decimals(Real v, int places);
// Round a positive value up to `digits` significant figures.
Scientific round_up_significant(const LogScalar& v, int digits);

struct Candidate {
  Real sigma;
  LogScalar eps0;
  bool decreasing;
};

struct PintzRow {
  Real X;
  Real sigma;
  Real A;  // rounded up to 1 decimal
  Real B;
  Real C;  // rounded down to 2 decimals
  Scientific eps0;  // rounded up to 3 significant figures
  Real exact_A;
  Real exact_exponent;
  LogScalar exact_eps0;
  LogScalar k;
  Corrections corrections;
  std::vector<Candidate> candidates;
};

// Minimises epsilon0 over the candidate sigmas for which A is decreasing
// past X. Empty `sigmas` means every sigma in the table. Throws
// CertificationError when no candidate passes the monotonicity test.
PintzRow make_row(Real X, const ZeroDensityTable& table, const ZeroFreeRegion& region = {},
                  std::vector<Real> sigmas = {});

// The constant for |theta(x) - x|: A + 0.1 (the psi - theta gap is far below
// 0.1 x / (log x / R)^B exp(-C sqrt(log x / R)) once log x >= 1000).
Real theta_variant(const PintzRow& row);

// A published table row used as a back-solve target.
struct TargetRow {
  Real X;
  Real sigma;
  Real A;
  Real B;
  Real C;
  Scientific eps0;
};

// The ten rows X = 1000, 2000, ..., 10000 of the published table.
const std::vector<TargetRow>& reference_table();

struct BacksolveEstimate {
  Real X;
  Real C1;
};

struct BacksolveGroup {
  Real sigma;
  std::vector<BacksolveEstimate> estimates;
  Real mean;
  // (max - min) / mean; infinite with a single row.
  Real spread = std::numeric_limits<Real>::infinity();
  bool consistent = false;
};

inline constexpr Real kBacksolveSpreadLimit = 0.01L;

// Solves A_target = floor(C1) + C3 + C4 + C5(C2) for C1, grouped by sigma
// in ascending order. A group is consistent iff it has at least two rows and
// spread <= 1%.
std::vector<BacksolveGroup> backsolve_density(const std::vector<TargetRow>& targets, Real assumed_C2,
                                              const ZeroFreeRegion& region = {});

inline constexpr Real kDefaultC2 = 3;

// Density table holding each group's mean C1 and the assumed C2.
ZeroDensityTable density_from_backsolve(const std::vector<BacksolveGroup>& groups, Real C2,
                                        const std::string& source, Real rh_height);

}  // namespace pnt::pintz
