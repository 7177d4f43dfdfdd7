#pragma once

// Seeded verification campaigns: draw hypothesis-satisfying instances for a
// functional, run its check, and tally holds/equalities/errors/violations.
// Trial i always uses RNG stream (seed, i), so results do not depend on how
// trials are split across threads.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "altineq/classical.hpp"
#include "altineq/error.hpp"
#include "altineq/exponents.hpp"
#include "altineq/numeric.hpp"
#include "altineq/ratios.hpp"
#include "altineq/report.hpp"
#include "altineq/seqcore.hpp"

namespace altineq {

inline constexpr std::array<std::string_view, 16> kCampaignFunctionals = {
    "holder", "cauchy",      "minkowski_alt", "reverse_minkowski", "lemma",   "power_ratio",
    "alt_superadditivity",   "szego",         "brunk_olkin",       "zhuang",  "quasi_norm",
    "bougoffa",              "jensen",        "young",             "power_bracket", "superadditivity"};

inline bool is_campaign_functional(std::string_view name) {
  return std::find(kCampaignFunctionals.begin(), kCampaignFunctionals.end(), name) != kCampaignFunctionals.end();
}

enum class PairGenerator {
  hypothesis,   // instances satisfy the functional's hypotheses
  independent,  // a and b drawn independently (quotient monotonicity not enforced)
};

struct CampaignConfig {
  std::string functional;
  std::size_t trials = 100000;
  std::size_t n_min = 2;
  std::size_t n_max = 64;
  double box_lo = 0.1;
  double box_hi = 10.0;
  std::vector<Rational> exponents;  // empty: functional default
  std::uint64_t seed = 0;
  double tol_rel = kTolCmp;
  PairGenerator generator = PairGenerator::hypothesis;
  std::size_t threads = 1;
};

struct Offender {
  std::size_t trial = 0;
  RatioReport report;
  std::vector<double> a;
  std::vector<double> b;
};

struct CampaignReport {
  std::string functional;
  std::size_t trials = 0;
  std::size_t holds = 0;
  std::size_t equalities = 0;
  std::size_t errors = 0;  // degenerate or hypothesis-violating instances
  std::size_t violations = 0;
  double worst_slack = std::numeric_limits<double>::infinity();  // slack / max(1, |bound|)
  std::size_t worst_trial = 0;
  std::optional<Offender> offender;  // lowest-index violation
};

namespace detail {

inline bool needs_p_above_one(std::string_view f) { return f == "holder" || f == "young"; }
inline bool needs_p_at_least_one(std::string_view f) {
  return f == "reverse_minkowski" || f == "bougoffa" || f == "power_bracket" || f == "superadditivity";
}
inline bool needs_p_below_one(std::string_view f) { return f == "quasi_norm"; }
inline bool uses_exponent(std::string_view f) {
  return f != "cauchy" && f != "lemma" && f != "power_ratio" && f != "szego" && f != "brunk_olkin" && f != "zhuang";
}

inline std::vector<Rational> admissible_exponents(const CampaignConfig& c) {
  std::vector<Rational> in = c.exponents;
  if (in.empty()) {
    in = needs_p_below_one(c.functional) ? std::vector<Rational>{{1, 4}, {1, 2}, {3, 4}}
                                         : std::vector<Rational>{{1, 1}, {3, 2}, {2, 1}, {3, 1}};
  }
  std::vector<Rational> out;
  for (const auto& r : in) {
    const double p = r.value();
    if (!(p > 0.0)) continue;
    if (needs_p_above_one(c.functional) && !(p > 1.0)) continue;
    if (needs_p_at_least_one(c.functional) && !(p >= 1.0)) continue;
    if (needs_p_below_one(c.functional) && !(p < 1.0)) continue;
    out.push_back(r);
  }
  return out;
}

struct Instance {
  RatioReport report;
  std::vector<double> a;
  std::vector<double> b;
};

class TrialRunner {
 public:
  explicit TrialRunner(const CampaignConfig& c)
      : c_(c), exps_(admissible_exponents(c)) {
    if (c.functional == "szego" || c.functional == "brunk_olkin") {
      for (double p : {1.0, 1.5, 2.0, 3.0}) fns_.push_back(ConvexFn::power(p, c.box_hi));
      fns_.push_back(ConvexFn::exponential(c.box_hi));
    }
  }

  Instance run(std::size_t trial) const {
    auto rng = stream_engine(c_.seed, trial);
    const auto& f = c_.functional;
    std::size_t n = static_cast<std::size_t>(uniform_int(rng, static_cast<std::int64_t>(c_.n_min),
                                                         static_cast<std::int64_t>(c_.n_max)));
    const Rational pr = exps_.empty() ? Rational{2, 1}
                                      : exps_[static_cast<std::size_t>(uniform_int(rng, 0, exps_.size() - 1))];
    const double p = pr.value();

    if (f == "jensen" || f == "young" || f == "power_bracket" || f == "superadditivity") {
      double alpha = uniform(rng, 0.0, 10.0);
      double beta = uniform(rng, 0.0, 10.0);
      if (f == "power_bracket" && alpha < beta) std::swap(alpha, beta);
      RatioReport r = f == "jensen"          ? jensen_check({alpha, beta, p}, c_.tol_rel)
                      : f == "young"         ? young_check(alpha, beta, ConjugateExponents::from_rational(pr), c_.tol_rel)
                      : f == "power_bracket" ? power_bracket_check(alpha, beta, p, c_.tol_rel)
                                             : superadditivity_check(alpha, beta, p, c_.tol_rel);
      return {std::move(r), {alpha}, {beta}};
    }

    if (f == "power_ratio" || f == "szego") n = odd_length(n);

    if (f == "reverse_minkowski" || f == "zhuang" || f == "bougoffa") {
      auto a = plain(rng, n);
      auto b = plain(rng, n);
      RatioReport r = f == "reverse_minkowski" ? reverse_minkowski_ratio(Seq(a), Seq(b), p, c_.tol_rel)
                      : f == "zhuang"          ? zhuang_check(Seq(a), Seq(b), std::nullopt, c_.tol_rel)
                                               : bougoffa_check(Seq(a), Seq(b), p, std::nullopt, c_.tol_rel);
      return {std::move(r), std::move(a), std::move(b)};
    }

    if (f == "lemma") {
      const auto [alo, ahi] = box(rng);
      const auto [blo, bhi] = box(rng);
      auto a = draw_monotone(n, alo, ahi, Direction::non_increasing, dist(rng), rng);
      auto b = draw_monotone(n, blo, bhi, Direction::non_decreasing, dist(rng), rng);
      auto r = lemma_compare(BoundedMonotoneSeq(a, Direction::non_increasing, std::pair{alo, ahi}, 0.0),
                             BoundedMonotoneSeq(b, Direction::non_decreasing, std::pair{blo, bhi}, 0.0), bhi,
                             c_.tol_rel);
      return {std::move(r), std::move(a), std::move(b)};
    }

    if (f == "power_ratio" || f == "szego") {
      auto x = monotone(rng, n);
      if (f == "power_ratio") {
        const int r_small = static_cast<int>(uniform_int(rng, 1, 4));
        const int r_big = static_cast<int>(uniform_int(rng, r_small, 4));
        auto r = power_ratio_bracket(BoundedMonotoneSeq(x, Direction::non_increasing), r_small, r_big, c_.tol_rel);
        return {std::move(r), std::move(x), {static_cast<double>(r_small), static_cast<double>(r_big)}};
      }
      const auto& fn = fns_[static_cast<std::size_t>(uniform_int(rng, 0, fns_.size() - 1))];
      auto r = szego_check(BoundedMonotoneSeq(x, Direction::non_increasing), fn, c_.tol_rel);
      r.functional = "szego:" + fn.name();
      return {std::move(r), std::move(x), {}};
    }

    if (f == "brunk_olkin") {
      auto w = draw_monotone(n, 0.0, 1.0, Direction::non_increasing, dist(rng), rng);
      auto b = monotone(rng, n);
      const auto& fn = fns_[static_cast<std::size_t>(uniform_int(rng, 0, fns_.size() - 1))];
      auto r = brunk_olkin_check(BoundedMonotoneSeq(w, Direction::non_increasing),
                                 BoundedMonotoneSeq(b, Direction::non_increasing), fn, c_.tol_rel);
      r.functional = "brunk_olkin:" + fn.name();
      return {std::move(r), std::move(w), std::move(b)};
    }

    auto a = monotone(rng, n);
    std::vector<double> b;
    if (f == "cauchy" && c_.generator == PairGenerator::hypothesis) {
      b = quotient_partner(rng, a);
    } else {
      b = monotone(rng, n);
    }
    const BoundedMonotoneSeq sa(a, Direction::non_increasing);
    const BoundedMonotoneSeq sb(b, Direction::non_increasing);
    RatioReport r;
    if (f == "holder") {
      r = holder_ratio(sa, sb, ConjugateExponents::from_rational(pr), c_.tol_rel);
    } else if (f == "cauchy") {
      r = cauchy_ratio(sa, sb, c_.tol_rel);
    } else if (f == "minkowski_alt") {
      r = minkowski_alt_ratio(sa, sb, p, c_.tol_rel);
    } else if (f == "alt_superadditivity") {
      r = alt_superadditivity_check(sa, sb, p, c_.tol_rel);
    } else if (f == "quasi_norm") {
      static constexpr std::array<double, 4> kScalars{0.0, 0.5, 3.0, -2.0};
      const auto suite = quasi_norm_axiom_suite(sa, sb, p, kScalars, c_.tol_rel);
      // The triangle report carries the verdict; a failing axiom overrides it.
      r = suite.back();
      for (const auto& s : suite) {
        if (!s.holds) {
          r = s;
          break;
        }
      }
    } else {
      throw InvalidArgument("unknown campaign functional '" + f + "'");
    }
    return {std::move(r), std::move(a), std::move(b)};
  }

 private:
  std::size_t odd_length(std::size_t n) const {
    if (n % 2 == 1) return n;
    return n + 1 <= c_.n_max ? n + 1 : n - 1;
  }

  std::pair<double, double> box(std::mt19937_64& rng) const {
    double lo = uniform(rng, c_.box_lo, c_.box_hi);
    double hi = uniform(rng, c_.box_lo, c_.box_hi);
    if (lo > hi) std::swap(lo, hi);
    return {lo, hi};
  }

  static Distribution dist(std::mt19937_64& rng) {
    return unit_uniform(rng) < 0.5 ? Distribution::uniform_gaps : Distribution::geometric_decay;
  }

  std::vector<double> monotone(std::mt19937_64& rng, std::size_t n) const {
    const auto [lo, hi] = box(rng);
    return draw_monotone(n, lo, hi, Direction::non_increasing, dist(rng), rng);
  }

  std::vector<double> plain(std::mt19937_64& rng, std::size_t n) const {
    const auto [lo, hi] = box(rng);
    std::vector<double> v(n);
    for (auto& x : v) x = uniform(rng, lo, hi);
    return v;
  }

  /// b with a_k / b_k monotone: either b = a / c for a non-decreasing c, or
  /// (rescaled) b = a * c for a non-increasing c in (0, 1].
  std::vector<double> quotient_partner(std::mt19937_64& rng, const std::vector<double>& a) const {
    const std::size_t n = a.size();
    const auto [lo, hi] = box(rng);
    std::vector<double> b(n);
    if (unit_uniform(rng) < 0.5) {
      const auto c = draw_monotone(n, lo, hi, Direction::non_decreasing, dist(rng), rng);
      for (std::size_t k = 0; k < n; ++k) b[k] = a[k] / c[k];
    } else {
      const auto c = draw_monotone(n, lo / hi, 1.0, Direction::non_increasing, dist(rng), rng);
      for (std::size_t k = 0; k < n; ++k) b[k] = a[k] * c[k] * hi;
    }
    return b;
  }

  const CampaignConfig& c_;
  std::vector<Rational> exps_;
  std::vector<ConvexFn> fns_;
};

inline void tally(CampaignReport& rep, std::size_t trial, Instance inst) {
  const RatioReport& r = inst.report;
  const double rel = r.slack / std::fmax(1.0, std::fabs(r.bound));
  if (rel < rep.worst_slack) {
    rep.worst_slack = rel;
    rep.worst_trial = trial;
  }
  if (r.holds) {
    ++rep.holds;
    if (r.equality || r.lower_equality) ++rep.equalities;
  } else {
    ++rep.violations;
    if (!rep.offender) rep.offender = Offender{trial, r, std::move(inst.a), std::move(inst.b)};
  }
}

inline void merge(CampaignReport& into, CampaignReport part) {
  into.trials += part.trials;
  into.holds += part.holds;
  into.equalities += part.equalities;
  into.errors += part.errors;
  into.violations += part.violations;
  if (part.worst_slack < into.worst_slack) {
    into.worst_slack = part.worst_slack;
    into.worst_trial = part.worst_trial;
  }
  if (!into.offender && part.offender) into.offender = std::move(part.offender);
}

}  // namespace detail

inline void validate_campaign(const CampaignConfig& c) {
  detail::require(is_campaign_functional(c.functional), "unknown functional '" + c.functional + "'");
  detail::require(c.n_min >= 1 && c.n_min <= c.n_max, "n range must satisfy 1 <= min <= max");
  detail::require(c.box_lo > 0.0 && c.box_lo < c.box_hi && std::isfinite(c.box_hi),
                  "box range must satisfy 0 < lo < hi < inf");
  detail::require(c.tol_rel >= 0.0, "tolerance must be non-negative");
  if ((c.functional == "power_ratio" || c.functional == "szego") && c.n_min == c.n_max) {
    detail::require(c.n_min % 2 == 1, "odd-length functional needs an odd length in the n range");
  }
  if (detail::uses_exponent(c.functional)) {
    detail::require(!detail::admissible_exponents(c).empty(),
                    "no admissible exponent for functional '" + c.functional + "'");
  }
}

inline CampaignReport run_campaign(const CampaignConfig& c) {
  validate_campaign(c);
  const detail::TrialRunner runner(c);
  const std::size_t workers = std::clamp<std::size_t>(c.threads, 1, std::max<std::size_t>(c.trials, 1));
  std::vector<CampaignReport> parts(workers);
  auto work = [&](std::size_t w) {
    // Contiguous chunks keep "lowest trial index" semantics under merge.
    const std::size_t begin = c.trials * w / workers;
    const std::size_t end = c.trials * (w + 1) / workers;
    auto& rep = parts[w];
    for (std::size_t t = begin; t < end; ++t) {
      ++rep.trials;
      try {
        detail::tally(rep, t, runner.run(t));
      } catch (const DegenerateDenominator&) {
        ++rep.errors;
      } catch (const HypothesisViolation&) {
        ++rep.errors;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  CampaignReport out;
  out.functional = c.functional;
  for (auto& part : parts) detail::merge(out, std::move(part));
  return out;
}

}  // namespace altineq
