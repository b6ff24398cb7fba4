#include "pnt/zeta/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <string>

#include "pnt/error.hpp"

namespace pnt::zeta {

ZeroCatalog::ZeroCatalog(std::vector<Real> gammas, Real covered_height, int precision)
    : gammas_(std::move(gammas)), precision_(precision) {
  for (std::size_t i = 0; i < gammas_.size(); ++i) {
    if (!(gammas_[i] > 0) || (i > 0 && !(gammas_[i] > gammas_[i - 1]))) {
      throw DomainError("ZeroCatalog: ordinates must be positive and strictly ascending (index " +
                        std::to_string(i) + ")");
    }
  }
  covered_ = covered_height >= 0 ? covered_height : (gammas_.empty() ? 0 : gammas_.back());
  if (!gammas_.empty() && covered_ < gammas_.back()) {
    throw DomainError("ZeroCatalog: covered height below the last ordinate");
  }
  prefix_.resize(gammas_.size() + 1);
  Real sum = 0, comp = 0;
  for (std::size_t i = 0; i < gammas_.size(); ++i) {
    const Real x = 1 / gammas_[i];
    const Real t = sum + x;
    comp += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
    prefix_[i + 1] = sum + comp;
  }
}

std::size_t ZeroCatalog::count_up_to(Real T) const {
  return static_cast<std::size_t>(std::upper_bound(gammas_.begin(), gammas_.end(), T) - gammas_.begin());
}

ZeroCatalog ZeroCatalog::truncated(Real T) const {
  if (T > covered_) throw CoverageError("ZeroCatalog: cannot truncate above covered height");
  const std::size_t n = count_up_to(T);
  return ZeroCatalog(std::vector<Real>(gammas_.begin(), gammas_.begin() + static_cast<std::ptrdiff_t>(n)), T,
                     precision_);
}

ZeroCatalog parse_zero_catalog(std::istream& in, const std::string& name) {
  std::vector<Real> gammas;
  int precision = 1 << 30;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError(name + ":" + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    const std::string tok = line.substr(b, e - b + 1);
    const auto dot = tok.find('.');
    if (dot == std::string::npos) fail("missing decimal point in '" + tok + "'");
    if (tok.find_first_not_of("0123456789.") != std::string::npos || tok.find('.', dot + 1) != std::string::npos) {
      fail("not a decimal number: '" + tok + "'");
    }
    const int places = static_cast<int>(tok.size() - dot - 1);
    if (places < kMinCatalogPrecision) {
      fail("only " + std::to_string(places) + " decimal places, need at least " +
           std::to_string(kMinCatalogPrecision));
    }
    precision = std::min(precision, places);
    const Real g = std::stold(tok);
    if (gammas.empty() && std::fabs(g - kFirstZero) > 1e-4L) {
      fail("first ordinate " + tok + " is not the first zeta zero 14.134725...");
    }
    if (!gammas.empty() && !(g > gammas.back())) fail("ordinates not strictly ascending at '" + tok + "'");
    gammas.push_back(g);
  }
  if (gammas.empty()) throw ParseError(name + ": no ordinates");
  return ZeroCatalog(std::move(gammas), -1, precision);
}

ZeroCatalog load_zero_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open zero catalog " + path.string());
  return parse_zero_catalog(in, path.string());
}

Real sum_recip_gamma(const ZeroCatalog& catalog, Real T) {
  if (T > catalog.covered_height()) {
    throw CoverageError("sum_recip_gamma: need zeros up to height " + std::to_string(static_cast<double>(T)) +
                        ", catalog covers " + std::to_string(static_cast<double>(catalog.covered_height())));
  }
  return catalog.reciprocal_prefix(catalog.count_up_to(T));
}

}  // namespace pnt::zeta
