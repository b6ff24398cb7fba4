#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "pnt/numerics/real.hpp"

namespace pnt::zeta {

// Constants of one zero-density estimate
//   N(sigma, T) <= C1 T^(8(1-sigma)/3) log^(5-2sigma) T + C2 log^2 T.
struct DensityEntry {
  Real sigma;
  Real C1;
  Real C2;
  std::string source;
  // RH verification height the constants were derived under; 0 if unknown.
  Real rh_height = 0;
};

class ZeroDensityTable {
 public:
  ZeroDensityTable() = default;
  // Throws DomainError unless sigma is strictly increasing within [0.75, 1)
  // and C1, C2 > 0.
  explicit ZeroDensityTable(std::vector<DensityEntry> entries);

  const std::vector<DensityEntry>& entries() const { return entries_; }
  bool contains(Real sigma) const;
  // Exact lookup; the estimate is per-sigma so there is no interpolation.
  // Throws DomainError naming the supported values.
  const DensityEntry& at(Real sigma) const;
  std::vector<Real> sigmas() const;

 private:
  std::vector<DensityEntry> entries_;
};

// Key-value text format:
//
//   # comment
//   [entry]
//   sigma = 0.98
//   C1 = 16.5458
//   C2 = 3
//   rh_height = 3.06e10
//   source = free text to end of line
//
// Throws ParseError with the offending line number.
ZeroDensityTable parse_density_table(std::istream& in, const std::string& name = "<stream>");
ZeroDensityTable load_density_table(const std::filesystem::path& path);
void write_density_table(std::ostream& out, const ZeroDensityTable& table);

// Upper bound for N(sigma, T). Requires T >= 3 and sigma present in the table.
Real density_bound(const ZeroDensityTable& table, Real sigma, Real T);

}  // namespace pnt::zeta
