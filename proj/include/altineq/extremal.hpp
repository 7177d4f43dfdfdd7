#pragma once

// Multi-start compass search over monotone sequence pairs, used to approach
// the sharp constants empirically and to stress-test the proved bounds.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "altineq/error.hpp"
#include "altineq/exponents.hpp"
#include "altineq/numeric.hpp"
#include "altineq/ratios.hpp"
#include "altineq/report.hpp"
#include "altineq/seqcore.hpp"

namespace altineq {

enum class Functional { holder, cauchy, minkowski_alt, reverse_minkowski, power_ratio };
enum class Goal { maximize, minimize };

inline const char* to_string(Functional f) {
  switch (f) {
    case Functional::holder: return "holder";
    case Functional::cauchy: return "cauchy";
    case Functional::minkowski_alt: return "minkowski_alt";
    case Functional::reverse_minkowski: return "reverse_minkowski";
    case Functional::power_ratio: return "power_ratio";
  }
  return "?";
}

inline const char* to_string(Goal g) { return g == Goal::maximize ? "maximize" : "minimize"; }

struct SearchConfig {
  Functional functional = Functional::minkowski_alt;
  Goal direction = Goal::maximize;
  std::size_t n = 6;
  // Box per sequence. For cauchy the b box only fixes the range of the
  // quotient chain a_k / b_k in [a_lo / b_hi, a_hi / b_lo].
  double a_lo = 0.0;
  double a_hi = 1.0;
  double b_lo = 0.0;
  double b_hi = 1.0;
  double p = 2.0;
  int r = 1;  // power_ratio exponents r <= R
  int R = 2;
  std::size_t restarts = 64;
  std::uint64_t seed = 0;
  double step_init = 0.25;  // in units of box width
  double step_min = 1e-8;
  std::size_t max_evals = 20000;  // per restart
  std::size_t threads = 1;
};

struct SearchResult {
  double best_value = 0.0;
  BoundedMonotoneSeq a;
  BoundedMonotoneSeq b;
  double bound = 0.0;
  double gap = 0.0;
  std::size_t restart_index = 0;
  std::size_t evaluations = 0;
};

/// Unconstrained raw parameters -> non-increasing sequence in [lo, hi]. The
/// first entry is lo + (hi - lo)(1/2 + raw_0), clamped; each further entry
/// drops by |raw_k| (hi - lo) and is clamped at lo.
inline BoundedMonotoneSeq param_to_seq(std::span<const double> raw, std::size_t n, double lo, double hi) {
  detail::require(raw.size() == n && n >= 1, "param_to_seq: raw must have n entries");
  detail::require(lo >= 0.0 && hi >= lo, "param_to_seq: need 0 <= lo <= hi");
  const double width = hi - lo;
  std::vector<double> v(n);
  v[0] = std::clamp(lo + width * (0.5 + raw[0]), lo, hi);
  for (std::size_t k = 1; k < n; ++k) v[k] = std::max(lo, v[k - 1] - std::fabs(raw[k]) * width);
  return BoundedMonotoneSeq(std::move(v), Direction::non_increasing, std::pair{lo, hi}, 0.0);
}

struct CompassResult {
  std::vector<double> x;
  double value = -std::numeric_limits<double>::infinity();
  std::size_t evaluations = 0;
  std::vector<double> trace;  // objective after each accepted move, starting value first
};

/// Maximizes f by coordinate pattern search: probes +-step along each axis in
/// a fixed cyclic order, moves to the first improving probe, and halves the
/// step after a full cycle without improvement.
template <class F>
CompassResult compass_search(F&& f, std::vector<double> x0, double step_init, double step_min,
                             std::size_t max_evals) {
  CompassResult res;
  res.x = std::move(x0);
  res.value = f(res.x);
  res.evaluations = 1;
  res.trace.push_back(res.value);
  const std::size_t dirs = 2 * res.x.size();
  double step = step_init;
  std::size_t next = 0;
  while (step >= step_min && res.evaluations < max_evals) {
    bool moved = false;
    for (std::size_t t = 0; t < dirs && res.evaluations < max_evals; ++t) {
      const std::size_t dir = (next + t) % dirs;
      std::vector<double> probe = res.x;
      probe[dir / 2] += (dir % 2 == 0 ? step : -step);
      const double v = f(probe);
      ++res.evaluations;
      if (v > res.value) {
        res.x = std::move(probe);
        res.value = v;
        res.trace.push_back(v);
        next = dir;  // keep going in the direction that worked
        moved = true;
        break;
      }
    }
    if (!moved) step *= 0.5;
  }
  return res;
}

namespace detail {

inline void validate_config(const SearchConfig& c) {
  require<InfeasibleConfig>(c.restarts >= 1, "search: restarts must be >= 1");
  require<InfeasibleConfig>(c.step_min > 0.0 && c.step_min < c.step_init, "search: need 0 < step_min < step_init");
  require<InfeasibleConfig>(c.n >= 1, "search: n must be >= 1");
  require<InfeasibleConfig>(c.max_evals >= 1, "search: max_evals must be >= 1");
  require<InfeasibleConfig>(c.a_lo >= 0.0 && c.a_hi >= c.a_lo && c.b_lo >= 0.0 && c.b_hi >= c.b_lo &&
                                std::isfinite(c.a_hi) && std::isfinite(c.b_hi),
                            "search: boxes need 0 <= lo <= hi < inf");
  require<InfeasibleConfig>(std::isfinite(c.p) && c.p > 0.0, "search: p must be positive");
  switch (c.functional) {
    case Functional::holder:
      require<InfeasibleConfig>(c.p > 1.0, "search: holder needs p > 1");
      require<InfeasibleConfig>(c.a_lo > 0.0 && c.b_lo > 0.0, "search: holder needs positive lower bounds");
      break;
    case Functional::cauchy:
      require<InfeasibleConfig>(c.a_lo > 0.0 && c.b_lo > 0.0, "search: cauchy needs positive lower bounds");
      break;
    case Functional::reverse_minkowski:
      require<InfeasibleConfig>(c.p >= 1.0, "search: reverse_minkowski needs p >= 1");
      break;
    case Functional::power_ratio:
      require<InfeasibleConfig>(c.n % 2 == 1, "search: power_ratio needs odd n");
      require<InfeasibleConfig>(c.a_lo > 0.0, "search: power_ratio needs a positive lower bound");
      require<InfeasibleConfig>(c.r >= 1 && c.R >= c.r, "search: power_ratio needs 1 <= r <= R");
      break;
    case Functional::minkowski_alt: break;
  }
}

inline std::size_t param_dim(const SearchConfig& c) {
  return c.functional == Functional::power_ratio ? c.n : 2 * c.n;
}

inline SeqPair decode(const SearchConfig& c, std::span<const double> raw) {
  const auto head = raw.subspan(0, c.n);
  auto a = param_to_seq(head, c.n, c.a_lo, c.a_hi);
  if (c.functional == Functional::power_ratio) return {a, a};
  const auto tail = raw.subspan(c.n, c.n);
  if (c.functional != Functional::cauchy) return {std::move(a), param_to_seq(tail, c.n, c.b_lo, c.b_hi)};
  // b_k = a_k / c_k with c non-decreasing, so a_k / b_k is monotone and b
  // stays non-increasing.
  const auto chain = param_to_seq(tail, c.n, c.a_lo / c.b_hi, c.a_hi / c.b_lo);
  std::vector<double> b(c.n);
  for (std::size_t k = 0; k < c.n; ++k) b[k] = a[k] / chain[c.n - 1 - k];
  return {std::move(a), BoundedMonotoneSeq(std::move(b), Direction::non_increasing, std::nullopt, 0.0)};
}

inline RatioReport evaluate(const SearchConfig& c, const SeqPair& w) {
  switch (c.functional) {
    case Functional::holder: return holder_ratio(w.first, w.second, ConjugateExponents(c.p));
    case Functional::cauchy: return cauchy_ratio(w.first, w.second);
    case Functional::minkowski_alt: return minkowski_alt_ratio(w.first, w.second, c.p);
    case Functional::reverse_minkowski: return reverse_minkowski_ratio(w.first.seq(), w.second.seq(), c.p);
    case Functional::power_ratio: return power_ratio_bracket(w.first, c.r, c.R);
  }
  throw std::logic_error("unknown functional");
}

/// Lower bound reported when minimizing.
inline double lower_bound_of(const SearchConfig& c) {
  switch (c.functional) {
    case Functional::reverse_minkowski:
    case Functional::power_ratio: return 1.0;
    default: return 0.0;
  }
}

struct RestartOutcome {
  std::vector<double> x;
  double value = -std::numeric_limits<double>::infinity();
  std::size_t evaluations = 0;
};

inline RestartOutcome run_restart(const SearchConfig& c, std::size_t index) {
  auto rng = stream_engine(c.seed, index);
  const std::size_t dim = param_dim(c);
  std::vector<double> x0(dim);
  const double spread = unit_uniform(rng);
  for (std::size_t i = 0; i < dim; ++i) {
    const bool first = i == 0 || (dim == 2 * c.n && i == c.n);
    x0[i] = first ? uniform(rng, -0.5, 0.5) : spread * unit_uniform(rng) * 2.0 / static_cast<double>(c.n);
  }
  const double sign = c.direction == Goal::maximize ? 1.0 : -1.0;
  auto objective = [&](const std::vector<double>& x) {
    try {
      const double v = evaluate(c, decode(c, x)).ratio;
      return std::isfinite(v) ? sign * v : -std::numeric_limits<double>::infinity();
    } catch (const DegenerateDenominator&) {
    } catch (const InvalidArgument&) {
    }
    return -std::numeric_limits<double>::infinity();
  };
  auto res = compass_search(objective, std::move(x0), c.step_init, c.step_min, c.max_evals);
  return {std::move(res.x), res.value, res.evaluations};
}

}  // namespace detail

/// Multi-start compass search. Restarts are independent and merged by index;
/// the lowest restart index wins ties, so the result does not depend on the
/// thread count.
inline SearchResult search(const SearchConfig& config) {
  detail::validate_config(config);
  std::vector<detail::RestartOutcome> outcomes(config.restarts);
  const std::size_t workers = std::clamp<std::size_t>(config.threads, 1, config.restarts);
  if (workers == 1) {
    for (std::size_t i = 0; i < config.restarts; ++i) outcomes[i] = detail::run_restart(config, i);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < config.restarts; i += workers) outcomes[i] = detail::run_restart(config, i);
      });
    }
    for (auto& t : pool) t.join();
  }
  std::size_t best = 0;
  std::size_t evals = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    evals += outcomes[i].evaluations;
    if (outcomes[i].value > outcomes[best].value) best = i;
  }
  if (!std::isfinite(outcomes[best].value)) {
    throw InfeasibleConfig("search: no restart reached a non-degenerate instance");
  }
  auto witness = detail::decode(config, outcomes[best].x);
  const auto report = detail::evaluate(config, witness);
  const double bound = config.direction == Goal::maximize ? report.bound : detail::lower_bound_of(config);
  return SearchResult{report.ratio,
                      std::move(witness.first),
                      std::move(witness.second),
                      bound,
                      std::fabs(bound - report.ratio),
                      best,
                      evals};
}

/// True when the search result breaks the proved bound by more than tol.
inline bool violates_bound(const SearchConfig& c, const SearchResult& r, double tol_rel = kTolCmp) {
  const double tol = comparison_tol(r.bound, tol_rel);
  return c.direction == Goal::maximize ? r.best_value > r.bound + tol : r.best_value < r.bound - tol;
}

struct SharpnessComparison {
  std::string functional;
  std::string family;
  double p = 0.0;
  double search_best = 0.0;
  double constructive_best = 0.0;
  double constructive_param = 0.0;
  double difference = 0.0;  // search_best - constructive_best
  bool underperforms = false;
};

inline const char* family_for(Functional f) {
  switch (f) {
    case Functional::minkowski_alt: return "minkowski_eps_b";
    case Functional::reverse_minkowski: return "reverse_minkowski_eps_n";
    case Functional::holder: return "holder_blowup";
    default: return "";
  }
}

/// Compares a search result against the best point of a constructive
/// witness trace for the same functional and exponent.
inline SharpnessComparison sharpness_report(const SearchConfig& config, const SearchResult& result,
                                            const WitnessTrace& trace, double slack = 1e-3) {
  detail::require(trace.family == family_for(config.functional), "sharpness_report: family does not match functional");
  detail::require(trace.p == config.p, "sharpness_report: exponent mismatch");
  detail::require(!trace.points.empty(), "sharpness_report: empty trace");
  const auto best = std::max_element(trace.points.begin(), trace.points.end(),
                                     [](const TracePoint& x, const TracePoint& y) { return x.ratio < y.ratio; });
  SharpnessComparison cmp;
  cmp.functional = to_string(config.functional);
  cmp.family = trace.family;
  cmp.p = config.p;
  cmp.search_best = result.best_value;
  cmp.constructive_best = best->ratio;
  cmp.constructive_param = best->param;
  cmp.difference = result.best_value - best->ratio;
  cmp.underperforms = cmp.difference < -slack;
  return cmp;
}

inline SharpnessComparison sharpness_report(const SearchConfig& config, const WitnessTrace& trace,
                                            double slack = 1e-3) {
  return sharpness_report(config, search(config), trace, slack);
}

}  // namespace altineq
