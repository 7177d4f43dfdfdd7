#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "altineq/error.hpp"
#include "altineq/numeric.hpp"
#include "altineq/report.hpp"

namespace altineq {

enum class Direction { non_increasing, non_decreasing };

inline const char* to_string(Direction d) {
  return d == Direction::non_increasing ? "non-increasing" : "non-decreasing";
}

/// Finite, non-empty list of non-negative reals.
class Seq {
 public:
  explicit Seq(std::vector<double> values) : values_(std::move(values)) {
    detail::require(!values_.empty(), "sequence must have at least one element");
    for (double v : values_) {
      detail::require(std::isfinite(v) && v >= 0.0,
                      "sequence elements must be finite and non-negative");
    }
  }

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }
  const std::vector<double>& vec() const { return values_; }

  friend bool operator==(const Seq&, const Seq&) = default;

 private:
  std::vector<double> values_;
};

/// True iff consecutive differences respect `dir` within `tol`.
inline bool validate_monotone(std::span<const double> s, Direction dir, double tol = 0.0) {
  for (std::size_t k = 1; k < s.size(); ++k) {
    const double step = s[k] - s[k - 1];
    if (dir == Direction::non_increasing ? step > tol : step < -tol) return false;
  }
  return true;
}

/// A Seq that is monotone in a declared direction and lies in [lo, hi].
/// lo/hi default to the tight box (min/max of the values); callers may
/// widen them, which weakens but never invalidates derived bounds.
class BoundedMonotoneSeq {
 public:
  /// `tol_mono` < 0 selects the user-input slack kTolMonoUser * hi.
  BoundedMonotoneSeq(std::vector<double> values, Direction dir,
                     std::optional<std::pair<double, double>> box = std::nullopt,
                     double tol_mono = -1.0)
      : seq_(std::move(values)), dir_(dir) {
    const auto [mn, mx] = std::minmax_element(seq_.vec().begin(), seq_.vec().end());
    lo_ = box ? box->first : *mn;
    hi_ = box ? box->second : *mx;
    detail::require(lo_ >= 0.0 && hi_ >= lo_, "box must satisfy 0 <= lo <= hi");
    detail::require(*mn >= lo_ && *mx <= hi_, "sequence leaves its declared box");
    const double tol = tol_mono < 0.0 ? kTolMonoUser * hi_ : tol_mono;
    detail::require<HypothesisViolation>(validate_monotone(seq_.values(), dir, tol),
                                         std::string("sequence is not ") + altineq::to_string(dir));
  }

  static BoundedMonotoneSeq non_increasing(std::vector<double> v) {
    return {std::move(v), Direction::non_increasing};
  }
  static BoundedMonotoneSeq non_decreasing(std::vector<double> v) {
    return {std::move(v), Direction::non_decreasing};
  }

  std::span<const double> values() const { return seq_.values(); }
  const Seq& seq() const { return seq_; }
  std::size_t size() const { return seq_.size(); }
  double operator[](std::size_t k) const { return seq_[k]; }
  Direction direction() const { return dir_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }

  friend bool operator==(const BoundedMonotoneSeq&, const BoundedMonotoneSeq&) = default;

 private:
  Seq seq_;
  Direction dir_;
  double lo_ = 0.0;
  double hi_ = 0.0;
};

// ---------------------------------------------------------------------------
// Alternating sums. Every kernel evaluates sum_k (-1)^{k+1} t_k as the sum of
// consecutive pair differences (t_1 - t_2) + (t_3 - t_4) + ..., with a virtual
// zero after an odd-length tail. Each kernel forms its pair difference from
// differences of the inputs so that slowly varying sequences do not cancel.
// ---------------------------------------------------------------------------

/// pair_diff(i, has_next) returns t_i - t_{i+1} (or t_i when !has_next) for
/// even 0-based i.
template <class PairDiff>
  requires std::invocable<PairDiff, std::size_t, bool>
double sum_pairs(std::size_t n, PairDiff&& pair_diff) {
  detail::CompensatedSum acc;
  for (std::size_t i = 0; i < n; i += 2) acc.add(pair_diff(i, i + 1 < n));
  return acc.value();
}

inline double alt_sum(std::span<const double> s) {
  return sum_pairs(s.size(), [&](std::size_t i, bool next) { return next ? s[i] - s[i + 1] : s[i]; });
}

/// sum (-1)^{k+1} s_k^p, p > 0.
inline double alt_power_sum(std::span<const double> s, double p) {
  return sum_pairs(s.size(), [&](std::size_t i, bool next) {
    return next ? detail::pow_diff(s[i], s[i + 1], s[i] - s[i + 1], p) : std::pow(s[i], p);
  });
}

/// sum (-1)^{k+1} a_k b_k.
inline double alt_product_sum(std::span<const double> a, std::span<const double> b) {
  return sum_pairs(a.size(), [&](std::size_t i, bool next) {
    return next ? a[i] * (b[i] - b[i + 1]) + b[i + 1] * (a[i] - a[i + 1]) : a[i] * b[i];
  });
}

/// sum (-1)^{k+1} (a_k + b_k)^p.
inline double alt_power_sum_of_sums(std::span<const double> a, std::span<const double> b, double p) {
  return sum_pairs(a.size(), [&](std::size_t i, bool next) {
    if (!next) return std::pow(a[i] + b[i], p);
    const double d = (a[i] - a[i + 1]) + (b[i] - b[i + 1]);
    return detail::pow_diff(a[i] + b[i], a[i + 1] + b[i + 1], d, p);
  });
}

/// sum (-1)^{k+1} f(s_k).
template <class F>
double alt_map_sum(std::span<const double> s, F&& f) {
  return sum_pairs(s.size(), [&](std::size_t i, bool next) { return next ? f(s[i]) - f(s[i + 1]) : f(s[i]); });
}

/// Left-to-right signed summation; reference path for tests and diagnostics.
inline double alt_sum_naive(std::span<const double> s) {
  double acc = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) acc += (k % 2 == 0) ? s[k] : -s[k];
  return acc;
}

/// Comparison bound for a non-increasing a against a non-decreasing b <= B:
/// sum (-1)^{k+1} a_k b_k <= B sum (-1)^{k+1} a_k.
inline RatioReport lemma_compare(const BoundedMonotoneSeq& a, const BoundedMonotoneSeq& b, double B,
                                 double tol_rel = kTolCmp) {
  detail::require(a.size() == b.size(), "lemma_compare: length mismatch");
  detail::require<HypothesisViolation>(a.direction() == Direction::non_increasing,
                                       "lemma_compare: a must be non-increasing");
  detail::require<HypothesisViolation>(b.direction() == Direction::non_decreasing,
                                       "lemma_compare: b must be non-decreasing");
  const double bmax = *std::max_element(b.values().begin(), b.values().end());
  detail::require(B >= bmax, "lemma_compare: B is below max(b)");
  RatioReport r;
  r.functional = "lemma";
  r.n = a.size();
  r.numerator = alt_product_sum(a.values(), b.values());
  r.ratio = r.numerator;
  r.bound = B * alt_sum(a.values());
  return judge(std::move(r), tol_rel);
}

// ---------------------------------------------------------------------------
// Generation
// ---------------------------------------------------------------------------

enum class Distribution { uniform_gaps, geometric_decay };

inline const char* to_string(Distribution d) {
  return d == Distribution::uniform_gaps ? "uniform-gaps" : "geometric-decay";
}

struct GenSpec {
  std::size_t n = 1;
  double lo = 0.0;
  double hi = 1.0;
  Direction direction = Direction::non_increasing;
  std::uint64_t seed = 0;
  Distribution distribution = Distribution::uniform_gaps;

  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

/// Draws values in [lo, hi], orders them in `direction` and clamps. The box
/// of the result is the generating box, not the tight one.
inline std::vector<double> draw_monotone(std::size_t n, double lo, double hi, Direction dir,
                                         Distribution dist, std::mt19937_64& rng) {
  std::vector<double> v(n);
  const double width = hi - lo;
  if (dist == Distribution::uniform_gaps) {
    for (auto& x : v) x = lo + width * detail::unit_uniform(rng);
  } else {
    const double rate = detail::uniform(rng, 0.3, 1.0);
    double level = 1.0;
    for (auto& x : v) {
      x = lo + width * level;
      level *= detail::uniform(rng, rate, 1.0);
    }
  }
  if (dir == Direction::non_increasing) {
    std::sort(v.begin(), v.end(), std::greater<>());
  } else {
    std::sort(v.begin(), v.end());
  }
  for (auto& x : v) x = std::clamp(x, lo, hi);
  return v;
}

inline BoundedMonotoneSeq generate(const GenSpec& spec) {
  detail::require(spec.n >= 1, "GenSpec: n must be >= 1");
  detail::require(std::isfinite(spec.lo) && std::isfinite(spec.hi) && spec.lo >= 0.0 && spec.lo <= spec.hi,
                  "GenSpec: need 0 <= lo <= hi");
  std::mt19937_64 rng(spec.seed);
  auto v = draw_monotone(spec.n, spec.lo, spec.hi, spec.direction, spec.distribution, rng);
  return BoundedMonotoneSeq(std::move(v), spec.direction, std::pair{spec.lo, spec.hi}, 0.0);
}

}  // namespace altineq
