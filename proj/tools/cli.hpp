#pragma once

// altineq command line: verify | constants | sharpness | search | series.
// run_cli is the whole program; main() only forwards argv.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "altineq.hpp"

namespace altineq::cli {

inline constexpr const char* kVersion = "0.1.0";

enum Exit : int { kPass = 0, kViolation = 1, kUsage = 2, kDegenerate = 3 };

// ---- small parsers --------------------------------------------------------

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline double parse_real(const std::string& s) {
  // rationals welcome: "3/2"
  if (s.find('/') != std::string::npos) return parse_rational(s).value();
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  detail::require(ec == std::errc() && ptr == end && std::isfinite(v), "not a number: '" + s + "'");
  return v;
}

inline std::uint64_t parse_count(const std::string& s) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  detail::require(ec == std::errc() && ptr == end, "not a non-negative integer: '" + s + "'");
  return v;
}

inline std::vector<double> parse_reals(const std::string& s, std::size_t arity = 0) {
  std::vector<double> out;
  for (const auto& t : split(s, ',')) out.push_back(parse_real(t));
  detail::require(arity == 0 || out.size() == arity,
                  "expected " + std::to_string(arity) + " comma-separated numbers, got '" + s + "'");
  return out;
}

inline std::pair<double, double> parse_range(const std::string& s) {
  const auto parts = split(s, ':');
  detail::require(parts.size() == 2, "range must look like lo:hi, got '" + s + "'");
  return {parse_real(parts[0]), parse_real(parts[1])};
}

/// "lo:hi:step" (inclusive, index-based) or a comma list.
inline std::vector<double> parse_grid(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() == 1) return parse_reals(s);
  detail::require(parts.size() == 3, "grid must be lo:hi:step or a comma list, got '" + s + "'");
  const double lo = parse_real(parts[0]);
  const double hi = parse_real(parts[1]);
  const double step = parse_real(parts[2]);
  detail::require(step > 0.0 && hi >= lo, "grid needs step > 0 and lo <= hi");
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
  detail::require(count < 1000000, "grid too large");
  std::vector<double> g;
  for (std::size_t i = 0; i <= count; ++i) g.push_back(lo + static_cast<double>(i) * step);
  return g;
}

inline std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& t : split(s, ',')) out.push_back(parse_rational(t));
  return out;
}

inline std::size_t worker_count() {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("ALTINEQ_THREADS");
  if (env == nullptr || *env == '\0') return hw;
  const auto cap = parse_count(env);
  detail::require(cap >= 1, "ALTINEQ_THREADS must be >= 1");
  return std::min<std::size_t>(hw, cap);
}

inline std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// ---- manifest and output --------------------------------------------------

struct Globals {
  std::uint64_t seed = 0;
  std::string out;
  double tol = kTolCmp;
  std::string format = "json";
};

struct RunManifest {
  std::string command;
  json parameters = json::object();
  std::uint64_t seed = 0;
  std::string timestamp;
  std::string version = kVersion;
  std::vector<std::string> outputs;
};

inline json to_json(const RunManifest& m) {
  return json{{"command", m.command},     {"parameters", m.parameters}, {"seed", m.seed},
              {"timestamp", m.timestamp}, {"version", m.version},       {"outputs", m.outputs}};
}

struct Payload {
  json result;
  std::string csv;       // stdout rendering under --format csv
  std::string file_csv;  // table written to --out; empty means the JSON report
};

struct Ctx {
  Globals g;
  std::ostream& out;
  std::ostream& err;

  RunManifest manifest(const std::string& command, json params) const {
    params["tol"] = g.tol;
    params["format"] = g.format;
    return RunManifest{command, std::move(params), g.seed, utc_timestamp(), kVersion, {}};
  }

  int finish(RunManifest m, const Payload& p, int code) const {
    if (!g.out.empty()) m.outputs.push_back(g.out);
    const json report{{"schema_version", kSchemaVersion}, {"manifest", to_json(m)}, {"result", p.result}};
    if (!g.out.empty()) {
      std::ofstream f(g.out, std::ios::binary);
      detail::require(static_cast<bool>(f), "cannot open output file '" + g.out + "'");
      if (p.file_csv.empty()) {
        f << report.dump(2) << '\n';
      } else {
        f << p.file_csv;
      }
    }
    if (g.format == "csv" && !p.csv.empty()) {
      out << p.csv;
    } else {
      out << report.dump(2) << '\n';
    }
    return code;
  }
};

inline std::string csv_rows(const std::vector<std::vector<std::string>>& rows) {
  std::string s;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) s += ',';
      s += r[i];
    }
    s += '\n';
  }
  return s;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string functional;
  std::string trials = "100000";
  std::string n_range = "2:64";
  std::string box_range = "0.1:10";
  std::string p_list;
  std::string generator = "hypothesis";
};

inline int cmd_verify(const Ctx& ctx, const VerifyArgs& a) {
  std::vector<std::string> names;
  if (a.functional == "all") {
    names.assign(kCampaignFunctionals.begin(), kCampaignFunctionals.end());
  } else {
    for (const auto& f : split(a.functional, ',')) names.push_back(f);
  }
  const auto [nlo, nhi] = parse_range(a.n_range);
  detail::require(nlo >= 1 && nhi >= nlo && nlo == std::floor(nlo) && nhi == std::floor(nhi),
                  "n range must be integers 1 <= lo <= hi");
  const auto [blo, bhi] = parse_range(a.box_range);
  detail::require(a.generator == "hypothesis" || a.generator == "independent",
                  "generator must be hypothesis or independent");

  CampaignConfig base;
  base.trials = parse_count(a.trials);
  base.n_min = static_cast<std::size_t>(nlo);
  base.n_max = static_cast<std::size_t>(nhi);
  base.box_lo = blo;
  base.box_hi = bhi;
  if (!a.p_list.empty()) base.exponents = parse_rationals(a.p_list);
  base.seed = ctx.g.seed;
  base.tol_rel = ctx.g.tol;
  base.generator = a.generator == "hypothesis" ? PairGenerator::hypothesis : PairGenerator::independent;
  base.threads = worker_count();

  // validate everything before running anything
  std::vector<CampaignConfig> configs;
  for (const auto& n : names) {
    auto c = base;
    c.functional = n;
    validate_campaign(c);
    configs.push_back(std::move(c));
  }

  json reports = json::array();
  std::vector<std::vector<std::string>> rows{
      {"functional", "trials", "holds", "equalities", "errors", "violations", "worst_slack", "worst_trial"}};
  std::size_t violations = 0;
  for (const auto& c : configs) {
    const auto r = run_campaign(c);
    violations += r.violations;
    reports.push_back(to_json(r));
    const bool any = r.trials > r.errors;
    rows.push_back({r.functional, std::to_string(r.trials), std::to_string(r.holds), std::to_string(r.equalities),
                    std::to_string(r.errors), std::to_string(r.violations), any ? fmt17(r.worst_slack) : "",
                    any ? std::to_string(r.worst_trial) : ""});
  }
  json params{{"functional", a.functional}, {"trials", base.trials},  {"n_range", {base.n_min, base.n_max}},
              {"box_range", {blo, bhi}},    {"p", a.p_list},          {"generator", a.generator}};
  Payload p;
  p.result = {{"campaigns", reports}, {"violations", violations}};
  p.csv = csv_rows(rows);
  return ctx.finish(ctx.manifest("verify", std::move(params)), p, violations > 0 ? kViolation : kPass);
}

// ---- constants ------------------------------------------------------------

struct ConstantsArgs {
  std::string box;
  std::string p;
  std::string quotient;
};

inline int cmd_constants(const Ctx& ctx, const ConstantsArgs& a) {
  detail::require(a.box.empty() != a.quotient.empty(), "constants: choose exactly one of --box or --quotient");
  json params = json::object();
  json values = json::object();
  if (!a.box.empty()) {
    const auto v = parse_reals(a.box, 4);
    const BoundsBox box{v[0], v[1], v[2], v[3]};
    params["box"] = v;
    values["cauchy_c"] = cauchy_constant(box);
    values["zhuang_s"] = zhuang_constant(box);
    if (!a.p.empty()) {
      const auto pr = parse_rational(a.p);
      const double p = pr.value();
      detail::require(p > 0.0, "constants: p must be positive");
      params["p"] = p;
      if (p > 1.0) {
        const auto pq = ConjugateExponents::from_rational(pr);
        values["q"] = pq.q();
        values["holder_C"] = holder_constant(box, pq);
      }
      if (p >= 1.0) values["minkowski_2pow"] = minkowski_constant(p);
      else values["quasi_norm_K"] = quasi_norm_constant(p);
    }
  } else {
    detail::require(a.p.empty(), "constants: --p goes with --box");
    const auto v = parse_reals(a.quotient, 2);
    const QuotientBox qb{v[0], v[1]};
    params["quotient"] = v;
    values["C_mM"] = bougoffa_constant(qb);
    values["p_star"] = crossover_exponent(qb);
  }
  Payload p;
  p.result = values;
  std::vector<std::vector<std::string>> rows{{"name", "value"}};
  for (const auto& [k, v] : values.items()) rows.push_back({k, fmt17(v.get<double>())});
  p.csv = csv_rows(rows);
  if (ctx.g.format == "text") {
    for (const auto& [k, v] : values.items()) ctx.out << k << " = " << fmt17(v.get<double>()) << '\n';
    return kPass;
  }
  return ctx.finish(ctx.manifest("constants", std::move(params)), p, kPass);
}

// ---- sharpness ------------------------------------------------------------

struct SharpnessArgs {
  std::string family;
  std::string grid;
  std::string p = "2";
  std::size_t n = 4;
  double b_tail = 1.0;
  std::size_t pairs = 1;
};

inline bool strictly_decreasing_gaps(const WitnessTrace& t) {
  for (std::size_t i = 0; i < t.points.size(); ++i) {
    if (!(t.points[i].gap > 0.0)) return false;
    if (i > 0 && !(t.points[i].gap < t.points[i - 1].gap)) return false;
  }
  return true;
}

inline int cmd_sharpness(const Ctx& ctx, const SharpnessArgs& a) {
  const auto pr = parse_rational(a.p);
  const double p = pr.value();
  json params{{"family", a.family}, {"p", p}};
  WitnessTrace trace;
  json extra = json::object();
  bool pass = false;
  std::string property;

  if (a.family == "minkowski_eps_b") {
    const auto grid = parse_grid(a.grid.empty() ? "10,100,1000" : a.grid);
    params["grid"] = grid;
    trace = minkowski_sharpness_trace(p, grid);
    property = "gap positive and strictly decreasing";
    pass = strictly_decreasing_gaps(trace);
  } else if (a.family == "reverse_minkowski_eps_n") {
    std::vector<std::size_t> grid;
    for (double v : parse_grid(a.grid.empty() ? "10,100,1000" : a.grid)) {
      detail::require(v >= 1.0 && v == std::floor(v), "reverse_minkowski_eps_n: grid entries must be positive integers");
      grid.push_back(static_cast<std::size_t>(v));
    }
    params["grid"] = grid;
    trace = reverse_minkowski_sharpness_trace(p, grid);
    if (p == 1.0) {
      property = "gap identically zero";
      pass = std::all_of(trace.points.begin(), trace.points.end(), [](const TracePoint& t) { return t.gap == 0.0; });
    } else {
      property = "gap positive and strictly decreasing";
      pass = strictly_decreasing_gaps(trace);
    }
  } else if (a.family == "holder_blowup") {
    const auto grid = parse_grid(a.grid.empty() ? "1e-1,1e-2,1e-3,1e-4" : a.grid);
    params["grid"] = grid;
    params["b_tail"] = a.b_tail;
    params["pairs"] = a.pairs;
    trace = holder_blowup_trace(ConjugateExponents::from_rational(pr), a.b_tail, grid, a.pairs);
    property = "ratio above the estimate and strictly increasing as the gap shrinks";
    pass = true;
    for (std::size_t i = 0; i < trace.points.size(); ++i) {
      pass = pass && trace.points[i].gap >= -comparison_tol(trace.points[i].bound, ctx.g.tol);
      if (i > 0) pass = pass && trace.points[i].ratio > trace.points[i - 1].ratio;
    }
  } else if (a.family == "holder_zero") {
    detail::require(a.grid.empty(), "holder_zero takes --n, not --grid");
    detail::require(a.n >= 2 && a.n % 2 == 0, "holder_zero: --n must be even and >= 2");
    params["n"] = a.n;
    std::vector<double> plateau(a.n / 2);
    std::vector<double> b(a.n);
    for (std::size_t k = 0; k < plateau.size(); ++k) plateau[k] = static_cast<double>(plateau.size() - k);
    for (std::size_t k = 0; k < b.size(); ++k) b[k] = static_cast<double>(b.size() - k);
    const auto w = holder_zero_witness(a.n, Seq(plateau), Seq(b));
    const auto r = holder_ratio(w.first, w.second, ConjugateExponents::from_rational(pr), ctx.g.tol);
    trace = WitnessTrace{"holder_zero", "n", p, {{static_cast<double>(a.n), r.ratio, r.bound, r.bound - r.ratio}}};
    extra = {{"a", to_json(w.first)}, {"b", to_json(w.second)}, {"report", to_json(r)}};
    property = "ratio exactly zero";
    pass = r.ratio == 0.0;
  } else {
    throw InvalidArgument("unknown family '" + a.family + "'");
  }

  Payload out;
  out.result = {{"trace", to_json(trace)}, {"property", property}, {"pass", pass}};
  if (!extra.empty()) out.result["witness"] = extra;
  std::ostringstream csv;
  write_csv(csv, trace);
  out.csv = csv.str();
  out.file_csv = out.csv;
  return ctx.finish(ctx.manifest("sharpness", std::move(params)), out, pass ? kPass : kViolation);
}

// ---- search ---------------------------------------------------------------

struct SearchArgs {
  std::string functional = "minkowski_alt";
  std::string goal = "maximize";
  std::size_t n = 6;
  std::string box;
  std::string p = "2";
  int r = 1;
  int R = 2;
  std::size_t restarts = 64;
  double step_init = 0.25;
  double step_min = 1e-8;
  std::size_t max_evals = 20000;
};

inline Functional functional_from(const std::string& s) {
  for (auto f : {Functional::holder, Functional::cauchy, Functional::minkowski_alt, Functional::reverse_minkowski,
                 Functional::power_ratio}) {
    if (s == to_string(f)) return f;
  }
  throw InvalidArgument("unknown search functional '" + s + "'");
}

inline int cmd_search(const Ctx& ctx, const SearchArgs& a) {
  SearchConfig c;
  c.functional = functional_from(a.functional);
  detail::require(a.goal == "maximize" || a.goal == "minimize", "goal must be maximize or minimize");
  c.direction = a.goal == "maximize" ? Goal::maximize : Goal::minimize;
  c.n = a.n;
  if (!a.box.empty()) {
    const auto v = parse_reals(a.box, 4);
    c.a_lo = v[0];
    c.a_hi = v[1];
    c.b_lo = v[2];
    c.b_hi = v[3];
  } else if (c.functional == Functional::holder || c.functional == Functional::cauchy ||
             c.functional == Functional::power_ratio) {
    c.a_lo = c.b_lo = 1.0;
    c.a_hi = c.b_hi = 2.0;
  }
  c.p = parse_rational(a.p).value();
  c.r = a.r;
  c.R = a.R;
  c.restarts = a.restarts;
  c.seed = ctx.g.seed;
  c.step_init = a.step_init;
  c.step_min = a.step_min;
  c.max_evals = a.max_evals;
  c.threads = worker_count();

  const auto res = search(c);
  const bool bad = violates_bound(c, res, ctx.g.tol);
  json params{{"functional", a.functional},
              {"goal", a.goal},
              {"n", c.n},
              {"box", {c.a_lo, c.a_hi, c.b_lo, c.b_hi}},
              {"p", c.p},
              {"restarts", c.restarts},
              {"step_init", c.step_init},
              {"step_min", c.step_min},
              {"max_evals", c.max_evals}};
  if (c.functional == Functional::power_ratio) {
    params["r"] = c.r;
    params["R"] = c.R;
  }
  Payload p;
  p.result = to_json(c, res);
  p.result["violates_bound"] = bad;
  std::vector<std::vector<std::string>> rows{{"k", "a", "b"}};
  for (std::size_t k = 0; k < res.a.size(); ++k) rows.push_back({std::to_string(k + 1), fmt17(res.a[k]), fmt17(res.b[k])});
  p.csv = csv_rows(rows);
  return ctx.finish(ctx.manifest("search", std::move(params)), p, bad ? kViolation : kPass);
}

// ---- series ---------------------------------------------------------------

struct SeriesArgs {
  std::string mode;
  std::string s;
  std::string p = "2";
  std::string grid = "0.25:3:0.25";
  std::string a = "1.1,2,5,10";
  std::string b;
  std::size_t terms = 200;
  double series_tol = kSeriesTol;
};

inline std::vector<ConjugateExponents> exponent_list(const std::string& s) {
  std::vector<ConjugateExponents> out;
  for (const auto& r : parse_rationals(s)) out.push_back(ConjugateExponents::from_rational(r));
  return out;
}

inline int cmd_series(const Ctx& ctx, const SeriesArgs& a) {
  json params{{"mode", a.mode}, {"series_tol", a.series_tol}};
  Payload out;
  int code = kPass;
  if (a.mode == "eta" || a.mode == "zeta") {
    detail::require(!a.s.empty(), a.mode + ": --s is required");
    const double s = parse_real(a.s);
    params["s"] = s;
    const auto e = eta(s, a.series_tol);
    out.result = {{"eta", to_json(e)}};
    std::string value = fmt17(e.value);
    if (a.mode == "zeta") {
      const double z = zeta_from_eta(s, a.series_tol);
      const double factor = eta_zeta_factor(s);
      out.result["zeta"] = z;
      out.result["factor"] = factor;
      out.result["zeta_est_error"] = e.est_error / std::fabs(factor);
      value = fmt17(z);
    }
    out.csv = csv_rows({{"s", "value", "est_error", "terms"},
                        {fmt17(s), value, fmt17(e.est_error), std::to_string(e.terms_used)}});
  } else if (a.mode == "F_scan") {
    const auto pqs = exponent_list(a.p);
    const auto grid = parse_grid(a.grid);
    params["p"] = a.p;
    params["grid"] = grid;
    const auto scan = F_scan(pqs, grid, a.series_tol);
    out.result = summary_json(scan);
    std::ostringstream csv;
    write_csv(csv, scan);
    out.csv = csv.str();
    out.file_csv = out.csv;
    if (scan.violations > 0) code = kViolation;
  } else if (a.mode == "harmonic") {
    const auto pqs = exponent_list(a.p);
    const auto grid = parse_grid(a.grid);
    params["p"] = a.p;
    params["grid"] = grid;
    std::size_t violations = 0;
    json locus = json::array();
    std::vector<std::vector<std::string>> rows{{"alpha", "beta", "p", "lhs", "rhs", "slack", "holds", "equality"}};
    for (const auto& pq : pqs) {
      for (double al : grid) {
        for (double be : grid) {
          const auto r = harmonic_ineq_check(al, be, pq, a.series_tol, ctx.g.tol);
          if (!r.holds) ++violations;
          if (r.equality) locus.push_back({{"alpha", al}, {"beta", be}, {"p", pq.p()}});
          rows.push_back({fmt17(al), fmt17(be), fmt17(pq.p()), fmt17(r.ratio), fmt17(r.bound), fmt17(r.slack),
                          r.holds ? "1" : "0", r.equality ? "1" : "0"});
        }
      }
    }
    out.result = {{"points", rows.size() - 1}, {"violations", violations}, {"equality_locus", locus}};
    out.csv = csv_rows(rows);
    out.file_csv = out.csv;
    if (violations > 0) code = kViolation;
  } else if (a.mode == "geometric") {
    const auto pqs = exponent_list(a.p);
    const auto as = parse_reals(a.a);
    const auto bs = parse_reals(a.b.empty() ? a.a : a.b);
    params["p"] = a.p;
    params["a"] = as;
    params["b"] = bs;
    params["terms"] = a.terms;
    std::size_t violations = 0;
    double mismatch = 0.0;
    json locus = json::array();
    std::vector<std::vector<std::string>> rows{
        {"a", "b", "p", "lhs", "rhs", "slack", "holds", "equality", "series_mismatch"}};
    for (const auto& pq : pqs) {
      for (double x : as) {
        for (double y : bs) {
          const auto g = geometric_ineq_check(x, y, pq, a.terms, ctx.g.tol);
          const auto& r = g.report;
          if (!r.holds) ++violations;
          if (r.equality) locus.push_back({{"a", x}, {"b", y}, {"p", pq.p()}});
          mismatch = std::fmax(mismatch, g.max_mismatch);
          rows.push_back({fmt17(x), fmt17(y), fmt17(pq.p()), fmt17(r.ratio), fmt17(r.bound), fmt17(r.slack),
                          r.holds ? "1" : "0", r.equality ? "1" : "0", fmt17(g.max_mismatch)});
        }
      }
    }
    out.result = {{"points", rows.size() - 1},
                  {"violations", violations},
                  {"equality_locus", locus},
                  {"max_series_mismatch", mismatch}};
    out.csv = csv_rows(rows);
    out.file_csv = out.csv;
    if (violations > 0) code = kViolation;
  } else {
    throw InvalidArgument("unknown series mode '" + a.mode + "'");
  }
  return ctx.finish(ctx.manifest("series", std::move(params)), out, code);
}

// ---- entry ----------------------------------------------------------------

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"alternating-sign inequality toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "RNG seed");
  app.add_option("--out", g.out, "output file");
  app.add_option("--tol", g.tol, "relative comparison tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--format", g.format, "json | csv (constants also: text)")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "seeded verification campaign");
  verify->add_option("--functional", va.functional, "functional name, comma list, or all")->required();
  verify->add_option("--trials", va.trials);
  verify->add_option("--n-range", va.n_range, "lo:hi");
  verify->add_option("--box-range", va.box_range, "lo:hi");
  verify->add_option("--p", va.p_list, "comma list of exponents, rationals allowed");
  verify->add_option("--generator", va.generator, "hypothesis | independent");

  ConstantsArgs ca;
  auto* constants = app.add_subcommand("constants", "sharp constants for a box or a quotient range");
  constants->add_option("--box", ca.box, "a,A,b,B");
  constants->add_option("--p", ca.p);
  constants->add_option("--quotient", ca.quotient, "m,M");

  SharpnessArgs sa;
  auto* sharp = app.add_subcommand("sharpness", "witness-family traces");
  sharp->add_option("family", sa.family, "minkowski_eps_b | reverse_minkowski_eps_n | holder_blowup | holder_zero")
      ->required();
  sharp->add_option("--grid", sa.grid, "comma list or lo:hi:step");
  sharp->add_option("--p", sa.p);
  sharp->add_option("--n", sa.n);
  sharp->add_option("--b-tail", sa.b_tail);
  sharp->add_option("--pairs", sa.pairs);

  SearchArgs ra;
  auto* srch = app.add_subcommand("search", "multi-start compass search");
  srch->add_option("--functional", ra.functional);
  srch->add_option("--goal", ra.goal, "maximize | minimize");
  srch->add_option("--n", ra.n);
  srch->add_option("--box", ra.box, "a_lo,a_hi,b_lo,b_hi");
  srch->add_option("--p", ra.p);
  srch->add_option("--r", ra.r);
  srch->add_option("--R", ra.R);
  srch->add_option("--restarts", ra.restarts);
  srch->add_option("--step-init", ra.step_init);
  srch->add_option("--step-min", ra.step_min);
  srch->add_option("--max-evals", ra.max_evals);

  SeriesArgs ea;
  auto* series = app.add_subcommand("series", "eta, zeta and the series inequalities");
  series->add_option("mode", ea.mode, "eta | zeta | F_scan | harmonic | geometric")->required();
  series->add_option("--s", ea.s);
  series->add_option("--p", ea.p);
  series->add_option("--grid", ea.grid);
  series->add_option("--a", ea.a);
  series->add_option("--b", ea.b);
  series->add_option("--terms", ea.terms);
  series->add_option("--series-tol", ea.series_tol);

  for (auto* sub : {verify, constants, sharp, srch, series}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  const Ctx ctx{g, out, err};
  try {
    if (g.format == "text" && !constants->parsed()) throw InvalidArgument("--format text is only for constants");
    if (verify->parsed()) return cmd_verify(ctx, va);
    if (constants->parsed()) return cmd_constants(ctx, ca);
    if (sharp->parsed()) return cmd_sharpness(ctx, sa);
    if (srch->parsed()) return cmd_search(ctx, ra);
    return cmd_series(ctx, ea);
  } catch (const DegenerateDenominator& e) {
    err << "degenerate input: " << e.what() << '\n';
    return kDegenerate;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace altineq::cli
