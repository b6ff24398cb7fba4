#include "pnt/cli/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <json.hpp>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pnt/error.hpp"
#include "pnt/pi_li/pi_li.hpp"
#include "pnt/pintz/pintz.hpp"
#include "pnt/primes/sieve.hpp"
#include "pnt/ramanujan/ramanujan.hpp"
#include "pnt/zeta/catalog.hpp"
#include "pnt/zeta/density.hpp"
#include "pnt/zeta/region.hpp"

#ifndef PNT_DEFAULT_DATA_DIR
#define PNT_DEFAULT_DATA_DIR "data"
#endif

namespace pnt::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr const char* kSchema = "pntbound/1";

struct RunConfig {
  std::string data_dir;
  std::string density_path;
  std::string zeros_path;
  std::uint64_t sieve_limit = 10'000'000;
  std::string format = "json";
  int precision_bits = kPrecisionBits;
  std::size_t memory_budget = std::size_t{2} << 30;
  Real c2 = pintz::kDefaultC2;

  fs::path density() const {
    return density_path.empty() ? fs::path(data_dir) / "density" / "density_backsolved.ini" : fs::path(density_path);
  }
  fs::path zeros() const {
    return zeros_path.empty() ? fs::path(data_dir) / "zeros" / "zeros_100k.txt" : fs::path(zeros_path);
  }
};

// A number with its rounding tag. Values outside double range are emitted
// as decimal strings.
Json tagged(const LogScalar& v, const char* rounding) {
  Json j;
  if (v.is_zero() || std::fabs(v.log10_mag()) < 300) {
    j["value"] = static_cast<double>(v.to_real());
  } else {
    j["value"] = to_string(v, 17);
  }
  j["rounding"] = rounding;
  return j;
}

Json tagged(Real v, const char* rounding) { return tagged(LogScalar::from_real(v), rounding); }

// Counts and other integers are always exact.
Json count(std::uint64_t n) { return Json{{"value", n}, {"rounding", "exact"}}; }

Json interval(const DirectedValue& v) {
  return Json{{"lower", tagged(v.lower(), "down")}, {"upper", tagged(v.upper(), "up")}};
}

// Accepts "1e9" style input for integer options.
const CLI::Validator kIntegerNotation(
    [](std::string& in) {
      std::size_t used = 0;
      long double v = 0;
      try {
        v = std::stold(in, &used);
      } catch (const std::exception&) {
        return std::string("not a number: ") + in;
      }
      if (used != in.size() || v < 0 || v > 1.8e19L || v != std::floor(v)) return "not a nonnegative integer: " + in;
      in = std::to_string(static_cast<std::uint64_t>(v));
      return std::string();
    },
    "INTEGER");

std::string fmt(Real v, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << static_cast<double>(v);
  return os.str();
}

// Flat rendering of a JSON certificate as key,value,rounding lines.
void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object() && j.contains("value") && j.contains("rounding")) {
    out << prefix << "," << (j["value"].is_string() ? j["value"].get<std::string>() : j["value"].dump()) << ","
        << j["rounding"].get<std::string>() << "\n";
    return;
  }
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
    return;
  }
  out << prefix << "," << (j.is_string() ? j.get<std::string>() : j.dump()) << ",exact\n";
}

void emit(const RunConfig& cfg, Json doc, std::ostream& out) {
  if (cfg.format == "csv") {
    out << "key,value,rounding\n";
    flatten(doc, "", out);
  } else {
    out << doc.dump(2) << "\n";
  }
}

Json header(const char* command) { return Json{{"schema", kSchema}, {"command", command}}; }

zeta::ZeroDensityTable load_density(const RunConfig& cfg) { return zeta::load_density_table(cfg.density()); }

std::string density_source(const zeta::ZeroDensityTable& t) {
  std::string s;
  for (const auto& e : t.entries()) {
    if (!s.empty()) s += "; ";
    s += "sigma " + fmt(e.sigma, 4) + ": " + e.source;
  }
  return s;
}

primes::SieveTables sieve(const RunConfig& cfg, std::uint64_t at_least) {
  primes::SieveOptions opts;
  opts.memory_budget_bytes = cfg.memory_budget;
  return primes::build_sieve(std::max(cfg.sieve_limit, at_least), opts);
}

Json row_json(const pintz::PintzRow& r) {
  Json j;
  j["X"] = tagged(r.X, "exact");
  j["sigma"] = tagged(r.sigma, "exact");
  j["A"] = tagged(r.A, "up");
  j["A_exact"] = tagged(r.exact_A, "exact");
  j["B"] = tagged(r.B, "exact");
  j["C"] = tagged(r.C, "down");
  j["C_exact"] = tagged(r.exact_exponent, "exact");
  j["eps0"] = {{"value", r.eps0.str()}, {"rounding", "up"}};
  j["eps0_exact"] = tagged(r.exact_eps0, "exact");
  j["k"] = tagged(r.k, "exact");
  j["C3"] = tagged(r.corrections.C3, "exact");
  j["C4"] = tagged(r.corrections.C4, "exact");
  j["C5_per_C2"] = tagged(r.corrections.C5_coeff, "exact");
  return j;
}

int cmd_pnt_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto table = load_density(cfg);
  bool ok = true;
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "X,sigma,A_rounded_up,A_exact,B_exact,C_rounded_down,C_exact,eps0_rounded_up,eps0_exact,A_published,eps0_published,match\n";
  for (const auto& t : pintz::reference_table()) {
    const auto r = pintz::make_row(t.X, table);
    const Real a_rel = std::fabs(r.exact_A - t.A) / t.A;
    const Real e_rel = std::fabs(std::exp(r.exact_eps0.log_mag() - t.eps0.value().log_mag()) - 1);
    const bool match = std::fabs(r.sigma - t.sigma) < 1e-12L && a_rel <= 0.005L && e_rel <= 0.01L && std::fabs(r.B - t.B) < 1e-12L &&
                       std::fabs(r.C - t.C) < 1e-12L;
    ok = ok && match;
    auto j = row_json(r);
    j["published"] = {{"A", tagged(t.A, "exact")}, {"eps0", {{"value", t.eps0.str()}, {"rounding", "exact"}}}};
    j["match"] = match;
    rows.push_back(j);
    csv << fmt(r.X) << "," << fmt(r.sigma) << "," << fmt(r.A) << "," << fmt(r.exact_A) << "," << fmt(r.B) << ","
        << fmt(r.C) << "," << fmt(r.exact_exponent) << "," << r.eps0.str() << "," << to_string(r.exact_eps0, 12)
        << "," << fmt(t.A) << "," << t.eps0.str() << "," << (match ? "yes" : "no") << "\n";
  }
  if (cfg.format == "csv") {
    out << csv.str();
  } else {
    auto doc = header("pnt-table");
    doc["density_source"] = density_source(table);
    doc["rows"] = rows;
    doc["all_match"] = ok;
    out << doc.dump(2) << "\n";
  }
  if (!ok) err << "pnt-table: a recomputed row misses its published value\n";
  return ok ? kOk : kCertificationFailure;
}

int cmd_epsilon(const RunConfig& cfg, Real sigma, Real logx0, std::ostream& out) {
  const auto table = load_density(cfg);
  const auto c = pintz::pintz_constants(sigma, logx0, table);
  auto doc = header("epsilon");
  doc["density_source"] = table.at(sigma).source;
  doc["sigma"] = tagged(sigma, "exact");
  doc["log_x0"] = tagged(logx0, "exact");
  doc["k"] = tagged(c.k, "exact");
  doc["C3"] = tagged(c.C3, "exact");
  doc["C4"] = tagged(c.C4, "exact");
  doc["C5"] = tagged(c.C5, "exact");
  doc["A"] = tagged(pintz::big_A(sigma, logx0, table), "exact");
  doc["eps0"] = tagged(pintz::epsilon0(sigma, logx0, table), "exact");
  doc["eps0_3sf"] = {{"value", pintz::round_up_significant(pintz::epsilon0(sigma, logx0, table), 3).str()},
                     {"rounding", "up"}};
  doc["A_decreasing"] = pintz::a_is_decreasing(sigma, logx0, table);
  emit(cfg, doc, out);
  return kOk;
}

int cmd_backsolve(const RunConfig& cfg, const std::string& write_path, std::ostream& out, std::ostream& err) {
  const auto groups = pintz::backsolve_density(pintz::reference_table(), cfg.c2);
  auto doc = header("backsolve");
  doc["assumed_C2"] = tagged(cfg.c2, "exact");
  bool ok = true;
  for (const auto& g : groups) {
    Json j;
    j["sigma"] = tagged(g.sigma, "exact");
    j["C1_mean"] = tagged(g.mean, "exact");
    j["spread"] = std::isfinite(static_cast<double>(g.spread)) ? tagged(g.spread, "exact")
                                                               : Json{{"value", "inf"}, {"rounding", "exact"}};
    j["consistent"] = g.consistent;
    for (const auto& e : g.estimates) j["estimates"].push_back({{"X", tagged(e.X, "exact")}, {"C1", tagged(e.C1, "exact")}});
    doc["groups"].push_back(j);
    ok = ok && g.consistent;
  }
  emit(cfg, doc, out);
  if (!write_path.empty()) {
    std::ofstream f(write_path);
    if (!f) throw Error("cannot write " + write_path);
    f << "# Zero-density constants back-solved from the published constants table\n"
      << "# with C2 = " << fmt(cfg.c2) << " assumed; C1 is the mean of the per-row estimates.\n";
    zeta::write_density_table(
        f, pintz::density_from_backsolve(groups, cfg.c2, "back-solved from published A with C2 assumed", 3.06e10L));
  }
  if (!ok) err << "backsolve: per-row C1 estimates disagree by more than 1%\n";
  return ok ? kOk : kCertificationFailure;
}

int cmd_zeros_check(const RunConfig& cfg, int samples, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  const auto cat = zeta::load_zero_catalog(cfg.zeros());
  const Real lo = 2 * std::numbers::pi_v<Real> * std::numbers::e_v<Real>;
  const Real hi = cat.covered_height();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(static_cast<double>(lo), static_cast<double>(hi));
  Real worst = 0, worst_T = lo;
  bool ok = true;
  for (int i = 0; i < samples; ++i) {
    const Real T = dist(rng);
    const auto b = zeta::recip_gamma_sum_bound(T);
    const Real dev = std::fabs(zeta::sum_recip_gamma(cat, T) - b.center);
    if (dev > worst) {
      worst = dev;
      worst_T = T;
    }
    ok = ok && dev <= b.radius;
  }
  auto doc = header("zeros-check");
  doc["file"] = cfg.zeros().string();
  doc["zeros"] = count(cat.size());
  doc["covered_height"] = tagged(cat.covered_height(), "exact");
  doc["decimal_places"] = count(static_cast<std::uint64_t>(cat.precision()));
  doc["zeros_up_to_100"] = count(cat.count_up_to(100));
  doc["samples"] = count(static_cast<std::uint64_t>(samples));
  doc["max_deviation"] = tagged(worst, "exact");
  doc["max_deviation_at_T"] = tagged(worst_T, "exact");
  doc["radius"] = tagged(zeta::kRecipGammaSumRadius, "exact");
  doc["within_radius"] = ok;
  emit(cfg, doc, out);
  if (!ok) err << "zeros-check: sum of 1/gamma leaves the stated band\n";
  return ok ? kOk : kCertificationFailure;
}

int cmd_pi_li(const RunConfig& cfg, Real x0_log, Real alpha, std::ostream& out, std::ostream& err) {
  const auto table = load_density(cfg);
  const auto tables = primes::build_sieve(1000);
  const auto exact = pi_li::exact_range_term(tables);
  // The table row whose threshold is the largest not above x0_log.
  const auto row = pintz::make_row(std::clamp<Real>(std::floor(x0_log / 1000) * 1000, 1000, 10000), table);
  const auto params = pi_li::PiLiParams::from_row(row, x0_log, alpha);
  auto doc = header("pi-li");
  doc["density_source"] = density_source(table);
  doc["row_X"] = tagged(row.X, "exact");
  doc["A1"] = tagged(params.A1, "up");
  doc["B"] = tagged(params.B, "exact");
  doc["C"] = tagged(params.C, "down");
  doc["alpha"] = tagged(alpha, "exact");
  doc["x0_log"] = tagged(x0_log, "exact");
  doc["exact_range_integral"] = interval(exact.integral);
  doc["exact_range_with_boundary"] = interval(exact.with_boundary);
  doc["i1_plus"] = tagged(exact.i1_plus, "up");
  doc["i1_plus_within_7.6"] = exact.within_allowance;
  doc["kitchen_margin"] = tagged(pi_li::kitchen_margin(x0_log, params.B, params.C, alpha), "exact");
  const auto d = pi_li::delta_bound(params, exact.i1_plus);
  doc["delta_first"] = interval(d.first);
  doc["delta_scale"] = interval(d.scale);
  doc["mid_range_integral"] = interval(d.mid_range);
  doc["upper_range_integral"] = interval(d.upper_range);
  doc["delta"] = interval(d.delta);
  const auto c = pi_li::corollary_constants(params, d.delta);
  doc["coefficient"] = tagged(c.coefficient.upper(), "up");
  doc["log_power"] = tagged(c.log_power, "exact");
  doc["exp_coefficient"] = tagged(c.exp_coefficient, "down");
  doc["exp_ceiling"] = tagged(c.exp_ceiling, "exact");
  const bool ok = c.certified && exact.within_allowance;
  doc["certified"] = ok;
  for (const auto& f : c.failures) doc["failures"].push_back(f);
  emit(cfg, doc, out);
  if (!ok) err << "pi-li: corollary constants not certified\n";
  return ok ? kOk : kCertificationFailure;
}

int cmd_e_upper(const RunConfig& cfg, Real x_log, const std::string& schedule, Real step, std::ostream& out) {
  const auto tables = primes::build_sieve(1000);
  std::vector<pi_li::ScheduleEntry> sched;
  if (schedule == "published") {
    sched = pi_li::published_schedule();
  } else {
    sched = pi_li::computed_schedule(1000, std::max<Real>(1000, x_log), step, load_density(cfg));
  }
  const auto e = pi_li::e_upper(x_log, sched, tables);
  const pi_li::CorollaryTargets t;
  const auto rhs = LogScalar::from_log(std::log(t.coefficient) + x_log + t.log_power * std::log(x_log) -
                                       t.exp_coefficient * std::sqrt(x_log));
  auto doc = header("e-upper");
  doc["x_log"] = tagged(x_log, "exact");
  doc["schedule"] = schedule;
  doc["schedule_entries"] = count(sched.size());
  if (schedule != "published") doc["density_source"] = density_source(load_density(cfg));
  doc["E"] = tagged(e, "up");
  doc["corollary_rhs"] = tagged(rhs, "exact");
  doc["E_over_rhs"] = tagged(e / rhs, "up");
  emit(cfg, doc, out);
  return kOk;
}

Json sufficiency_json(const ramanujan::Sufficiency& s, const ramanujan::PiecewiseEnvelope& env) {
  Json j = header("ramanujan");
  j["envelope"] = env.description();
  j["xa_log"] = tagged(s.xa_log, "exact");
  j["x_log"] = tagged(s.x_log, "exact");
  j["a_xa"] = tagged(s.constants.a_at_xa, "exact");
  j["a_x"] = tagged(ramanujan::a_envelope(s.x_log, env).a, "exact");
  j["K1"] = interval(s.constants.K1);
  j["K2"] = interval(s.constants.K2);
  j["K3"] = tagged(s.constants.K3, "up");
  j["far_slack"] = tagged(s.constants.far_slack, "up");
  j["Ma"] = interval(s.env.Ma);
  j["ma"] = interval(s.env.ma);
  j["epsM"] = interval(s.eps.epsM);
  j["epsm"] = interval(s.eps.epsm);
  j["margin"] = tagged(s.margin, "down");
  j["pass"] = s.pass;
  return j;
}

int cmd_ramanujan(const RunConfig& cfg, Real xa, Real x, Real scale, std::ostream& out, std::ostream& err) {
  const auto env = ramanujan::standard_envelope(scale);
  const auto s = ramanujan::sufficiency_check(xa, x, env);
  emit(cfg, sufficiency_json(s, env), out);
  if (!s.pass) err << "ramanujan: margin " << fmt(s.margin) << " is not positive\n";
  return s.pass ? kOk : kCertificationFailure;
}

int cmd_ramanujan_scan(const RunConfig& cfg, long lo, long hi, Real scale, std::ostream& out, std::ostream& err) {
  const auto env = ramanujan::standard_envelope(scale);
  const auto r = ramanujan::threshold_scan(env, lo, hi);
  if (cfg.format == "csv") {
    out << "L,margin,rounding\n";
    for (const auto& p : r.curve) out << p.L << "," << fmt(p.margin) << ",down\n";
  } else {
    auto doc = header("ramanujan-scan");
    doc["envelope"] = env.description();
    doc["lo"] = tagged(static_cast<Real>(lo), "exact");
    doc["hi"] = tagged(static_cast<Real>(hi), "exact");
    doc["first_pass"] = r.first_pass ? tagged(static_cast<Real>(*r.first_pass), "exact") : Json(nullptr);
    doc["curve"] = Json::array();
    for (const auto& p : r.curve) {
      doc["curve"].push_back({{"L", tagged(static_cast<Real>(p.L), "exact")}, {"margin", tagged(p.margin, "down")}});
    }
    out << doc.dump(2) << "\n";
  }
  if (!r.first_pass) err << "ramanujan-scan: no passing threshold in range\n";
  return r.first_pass ? kOk : kCertificationFailure;
}

int cmd_spot_check(const RunConfig& cfg, std::uint64_t x, bool allow_long, std::ostream& out, std::ostream& err) {
  ramanujan::SpotCheck s{};
  if (x <= cfg.sieve_limit) {
    s = ramanujan::inequality_spot_check(x, sieve(cfg, x));
  } else if (allow_long) {
    std::uint64_t next = 0;
    s = ramanujan::inequality_spot_check_streaming(x, [&](std::uint64_t h) {
      if (h >= next) {
        err << "sieved to " << h << "\n";
        next = h + 1'000'000'000ULL;
      }
    });
  } else {
    throw CoverageError("spot-check: x beyond --sieve-limit; pass --long to stream the count");
  }
  auto doc = header("spot-check");
  doc["x"] = count(s.x);
  doc["floor_x_over_e"] = count(s.x_over_e);
  doc["pi_x"] = count(s.pi_x);
  doc["pi_x_over_e"] = count(s.pi_x_over_e);
  doc["inequality"] = ramanujan::to_string(s.verdict);
  doc["digits"] = count(static_cast<std::uint64_t>(s.digits));
  emit(cfg, doc, out);
  return kOk;
}

int cmd_sieve_selftest(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto t = sieve(cfg, 0);
  // Independent check: trial division on a prefix, then theta <= psi and the
  // psi - theta bound on a grid.
  const std::uint64_t prefix = std::min<std::uint64_t>(t.limit(), 100'000);
  bool ok = true;
  for (std::uint64_t n = 0; n <= prefix && ok; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    ok = prime == t.is_prime(n);
  }
  for (int i = 1; i <= 1000 && ok; ++i) {
    const auto x = static_cast<std::uint64_t>(std::pow(static_cast<Real>(t.limit()), static_cast<Real>(i) / 1000));
    const auto c = primes::chebyshev(t, static_cast<Real>(x));
    ok = c.theta <= c.psi + 1e-9L &&
         c.psi - c.theta <= (1 + 1.47e-7L) * std::sqrt(static_cast<Real>(x)) + 1.78L * std::cbrt(static_cast<Real>(x));
  }
  auto doc = header("sieve-selftest");
  doc["limit"] = count(t.limit());
  doc["pi_limit"] = count(t.pi(t.limit()));
  doc["theta_limit"] = tagged(t.theta(t.limit()), "exact");
  doc["psi_limit"] = tagged(t.psi(t.limit()), "exact");
  doc["trial_division_prefix"] = count(prefix);
  doc["pass"] = ok;
  emit(cfg, doc, out);
  if (!ok) err << "sieve-selftest: mismatch\n";
  return ok ? kOk : kCertificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit prime number theorem bound engine", "pntbound"};
  app.require_subcommand(1);
  RunConfig cfg;
  const char* env_dir = std::getenv("PNTBOUND_DATA_DIR");
  cfg.data_dir = env_dir ? env_dir : PNT_DEFAULT_DATA_DIR;
  app.set_config("--config", "", "TOML/INI file with option values");
  app.add_option("--data-dir", cfg.data_dir, "Data directory (env PNTBOUND_DATA_DIR)");
  app.add_option("--density", cfg.density_path, "Zero-density constants file");
  app.add_option("--zeros", cfg.zeros_path, "Zero ordinates file");
  app.add_option("--sieve-limit", cfg.sieve_limit, "Sieve limit")
      ->transform(kIntegerNotation)
      ->check(CLI::Range(2.0, 1e11));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--precision-bits", cfg.precision_bits, "Working precision in bits")
      ->check(CLI::Range(60, kPrecisionBits));
  app.add_option("--memory-budget", cfg.memory_budget, "Sieve bitmap budget in bytes")->transform(kIntegerNotation);

  auto* table_cmd = app.add_subcommand("pnt-table", "Recompute the ten-row constants table");
  double sigma = 0, logx0 = 0;
  auto* eps_cmd = app.add_subcommand("epsilon", "epsilon0 and its ingredients at one (sigma, log x0)");
  eps_cmd->add_option("--sigma", sigma)->required();
  eps_cmd->add_option("--logx0", logx0)->required();
  std::string write_path;
  double c2 = static_cast<double>(pintz::kDefaultC2);
  auto* back_cmd = app.add_subcommand("backsolve", "Back-solve density constants from the published table");
  back_cmd->add_option("--c2", c2, "Assumed C2");
  back_cmd->add_option("--write", write_path, "Write the resulting density file");
  int samples = 200;
  std::uint64_t seed = 1;
  auto* zeros_cmd = app.add_subcommand("zeros-check", "Validate the zero catalog and the 1/gamma sum band");
  zeros_cmd->add_option("--samples", samples);
  zeros_cmd->add_option("--seed", seed);
  double x0_log = 2000, alpha = 0.47;
  auto* pili_cmd = app.add_subcommand("pi-li", "pi(x) - li(x) corollary certificate");
  pili_cmd->add_option("--x0-log", x0_log);
  pili_cmd->add_option("--alpha", alpha);
  double logx = 0, step = 1;
  std::string schedule = "published";
  auto* e_cmd = app.add_subcommand("e-upper", "Upper bound E(x) for |pi(x) - li(x)|");
  e_cmd->add_option("--logx", logx)->required();
  e_cmd->add_option("--schedule", schedule)->check(CLI::IsMember({"published", "computed"}));
  e_cmd->add_option("--step", step, "Spacing of a computed schedule");
  double xa = 3914, x = 3915, scale = 1;
  auto* ram_cmd = app.add_subcommand("ramanujan", "Sufficiency certificate for the inequality beyond e^x");
  ram_cmd->add_option("--xa", xa);
  ram_cmd->add_option("--x", x);
  ram_cmd->add_option("--scale", scale, "Multiply the envelope a(x)");
  long lo = 3900, hi = 3930;
  auto* scan_cmd = app.add_subcommand("ramanujan-scan", "Smallest integer log x certified");
  scan_cmd->add_option("--lo", lo);
  scan_cmd->add_option("--hi", hi);
  scan_cmd->add_option("--scale", scale);
  std::uint64_t spot_x = 0;
  bool allow_long = false;
  auto* spot_cmd = app.add_subcommand("spot-check", "Exact check of the inequality at one integer x");
  spot_cmd->add_option("--x", spot_x)->required()->transform(kIntegerNotation);
  spot_cmd->add_flag("--long", allow_long, "Stream the prime count beyond the sieve limit");
  auto* self_cmd = app.add_subcommand("sieve-selftest", "Cross-check the sieve");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "pntbound: " << e.what() << "\n";
    return kUsageOrData;
  }
  cfg.c2 = c2;

  try {
    if (*table_cmd) return cmd_pnt_table(cfg, out, err);
    if (*eps_cmd) return cmd_epsilon(cfg, sigma, logx0, out);
    if (*back_cmd) return cmd_backsolve(cfg, write_path, out, err);
    if (*zeros_cmd) return cmd_zeros_check(cfg, samples, seed, out, err);
    if (*pili_cmd) return cmd_pi_li(cfg, x0_log, alpha, out, err);
    if (*e_cmd) return cmd_e_upper(cfg, logx, schedule, step, out);
    if (*ram_cmd) return cmd_ramanujan(cfg, xa, x, scale, out, err);
    if (*scan_cmd) return cmd_ramanujan_scan(cfg, lo, hi, scale, out, err);
    if (*spot_cmd) return cmd_spot_check(cfg, spot_x, allow_long, out, err);
    if (*self_cmd) return cmd_sieve_selftest(cfg, out, err);
  } catch (const CertificationError& e) {
    err << "pntbound: certification failed: " << e.what() << "\n";
    return kCertificationFailure;
  } catch (const std::exception& e) {
    err << "pntbound: " << e.what() << "\n";
    return kUsageOrData;
  }
  return kUsageOrData;
}

}  // namespace pnt::cli
