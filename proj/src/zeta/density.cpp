#include "pnt/zeta/density.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "pnt/error.hpp"

namespace pnt::zeta {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::string list_sigmas(const std::vector<DensityEntry>& entries) {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? ", " : "") << static_cast<double>(entries[i].sigma);
  return os.str();
}

// sigma values arrive through text and double-typed flags; compare loosely
// enough to absorb the conversion but far tighter than any table spacing.
bool same_sigma(Real a, Real b) { return std::fabs(a - b) <= 1e-12L; }

}  // namespace

ZeroDensityTable::ZeroDensityTable(std::vector<DensityEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (!(e.sigma >= 0.75L && e.sigma < 1)) {
      throw DomainError("density table: sigma " + std::to_string(static_cast<double>(e.sigma)) +
                        " outside [0.75, 1)");
    }
    if (!(e.C1 > 0) || !(e.C2 > 0)) throw DomainError("density table: C1 and C2 must be positive");
    if (!(e.rh_height >= 0)) throw DomainError("density table: negative rh_height");
    if (i > 0 && !(e.sigma > entries_[i - 1].sigma)) throw DomainError("density table: sigma not strictly increasing");
  }
}

bool ZeroDensityTable::contains(Real sigma) const {
  for (const auto& e : entries_) {
    if (same_sigma(e.sigma, sigma)) return true;
  }
  return false;
}

const DensityEntry& ZeroDensityTable::at(Real sigma) const {
  for (const auto& e : entries_) {
    if (same_sigma(e.sigma, sigma)) return e;
  }
  throw DomainError("unsupported sigma " + std::to_string(static_cast<double>(sigma)) +
                    " (density constants are per-sigma; table has: " + list_sigmas(entries_) + ")");
}

std::vector<Real> ZeroDensityTable::sigmas() const {
  std::vector<Real> out;
  for (const auto& e : entries_) out.push_back(e.sigma);
  return out;
}

ZeroDensityTable parse_density_table(std::istream& in, const std::string& name) {
  std::vector<DensityEntry> entries;
  struct Pending {
    DensityEntry entry{};
    bool has_sigma = false, has_c1 = false, has_c2 = false;
    std::size_t line = 0;
  };
  std::optional<Pending> cur;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](std::size_t at, const std::string& what) {
    throw ParseError(name + ":" + std::to_string(at) + ": " + what);
  };
  auto finish = [&] {
    if (!cur) return;
    if (!cur->has_sigma || !cur->has_c1 || !cur->has_c2) fail(cur->line, "entry needs sigma, C1 and C2");
    entries.push_back(cur->entry);
    cur.reset();
  };
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t == "[entry]") {
      finish();
      cur = Pending{};
      cur->line = lineno;
      continue;
    }
    if (t.front() == '[') fail(lineno, "unknown section " + t);
    if (!cur) fail(lineno, "key outside an [entry] section");
    const auto eq = t.find('=');
    if (eq == std::string::npos) fail(lineno, "expected key = value");
    const std::string key = trim(t.substr(0, eq));
    const std::string val = trim(t.substr(eq + 1));
    if (key == "source") {
      cur->entry.source = val;
      continue;
    }
    Real v = 0;
    try {
      std::size_t used = 0;
      v = std::stold(val, &used);
      if (used != val.size()) throw std::invalid_argument(val);
    } catch (const std::exception&) {
      fail(lineno, "bad number '" + val + "' for " + key);
    }
    if (key == "sigma") {
      cur->entry.sigma = v;
      cur->has_sigma = true;
    } else if (key == "C1") {
      cur->entry.C1 = v;
      cur->has_c1 = true;
    } else if (key == "C2") {
      cur->entry.C2 = v;
      cur->has_c2 = true;
    } else if (key == "rh_height") {
      cur->entry.rh_height = v;
    } else {
      fail(lineno, "unknown key " + key);
    }
  }
  finish();
  if (entries.empty()) throw ParseError(name + ": no entries");
  try {
    return ZeroDensityTable(std::move(entries));
  } catch (const DomainError& e) {
    throw ParseError(name + ": " + e.what());
  }
}

ZeroDensityTable load_density_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open density table " + path.string());
  return parse_density_table(in, path.string());
}

namespace {

// Shortest decimal that reads back to the same value.
std::string shortest(Real v) {
  for (int digits = 1;; ++digits) {
    std::ostringstream os;
    os.precision(digits);
    os << v;
    if (std::stold(os.str()) == v || digits >= std::numeric_limits<Real>::max_digits10) return os.str();
  }
}

}  // namespace

void write_density_table(std::ostream& out, const ZeroDensityTable& table) {
  for (const auto& e : table.entries()) {
    out << "[entry]\n"
        << "sigma = " << shortest(e.sigma) << "\n"
        << "C1 = " << shortest(e.C1) << "\n"
        << "C2 = " << shortest(e.C2) << "\n";
    if (e.rh_height > 0) out << "rh_height = " << shortest(e.rh_height) << "\n";
    if (!e.source.empty()) out << "source = " << e.source << "\n";
    out << "\n";
  }
}

Real density_bound(const ZeroDensityTable& table, Real sigma, Real T) {
  const auto& e = table.at(sigma);
  if (!(T >= 3)) throw DomainError("density_bound: need T >= 3");
  const Real l = std::log(T);
  return e.C1 * std::pow(T, 8 * (1 - sigma) / 3) * std::pow(l, 5 - 2 * sigma) + e.C2 * l * l;
}

}  // namespace pnt::zeta
