#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pnt/numerics/real.hpp"

namespace pnt::zeta {

/// Ordinates 0 < gamma_1 < gamma_2 < ... of nontrivial zeros. Zeros below
/// the RH height are taken on the critical line, so only gamma is stored.
/// Immutable after construction.
class ZeroCatalog {
 public:
  ZeroCatalog() = default;
  // Throws DomainError unless gammas are positive and strictly ascending.
  // `covered_height` is the height up to which the list is complete; it
  // defaults to the last ordinate.
  explicit ZeroCatalog(std::vector<Real> gammas, Real covered_height = -1, int precision = 0);

  std::span<const Real> gammas() const { return gammas_; }
  std::size_t size() const { return gammas_.size(); }
  bool empty() const { return gammas_.empty(); }
  Real covered_height() const { return covered_; }
  // Fewest decimal places seen on any input line (0 when built in memory).
  int precision() const { return precision_; }

  // Number of ordinates <= T.
  std::size_t count_up_to(Real T) const;
  // Sum of 1/gamma over the first n ordinates, accumulated in ascending
  // order with compensation.
  Real reciprocal_prefix(std::size_t n) const { return prefix_[n]; }

  // Catalog complete up to T holding only ordinates <= T.
  ZeroCatalog truncated(Real T) const;

 private:
  std::vector<Real> gammas_;
  std::vector<Real> prefix_{0};
  Real covered_ = 0;
  int precision_ = 0;
};

inline constexpr Real kFirstZero = 14.134725141734693790L;
inline constexpr int kMinCatalogPrecision = 9;

// One decimal gamma per line, ascending; '#' starts a comment. Validates
// monotonicity, the first zero (within 1e-4 of 14.134725) and at least nine
// decimal places per entry. Throws ParseError with line diagnostics.
ZeroCatalog parse_zero_catalog(std::istream& in, const std::string& name = "<stream>");
ZeroCatalog load_zero_catalog(const std::filesystem::path& path);

// Sum of 1/gamma over 0 < gamma <= T. Throws CoverageError if T exceeds the
// catalog's covered height.
Real sum_recip_gamma(const ZeroCatalog& catalog, Real T);

}  // namespace pnt::zeta
