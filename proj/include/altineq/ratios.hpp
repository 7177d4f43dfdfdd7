#pragma once

// Ratio functionals for sums with alternating signs: reverse Hölder and
// Cauchy ratios, the alternating Minkowski ratio and its reverse for
// non-negative terms, their constants and witness families, the alternating
// quasi-norm, and the Jensen-type oracles of Szegő and Brunk-Olkin.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "altineq/error.hpp"
#include "altineq/exponents.hpp"
#include "altineq/numeric.hpp"
#include "altineq/report.hpp"
#include "altineq/seqcore.hpp"

namespace altineq {

/// 0 < m <= a_k / b_k <= M.
struct QuotientBox {
  double m = 1.0;
  double M = 1.0;
};

using SeqPair = std::pair<BoundedMonotoneSeq, BoundedMonotoneSeq>;

namespace detail {

inline void require_box(const BoundsBox& box) {
  require(box.a_lo > 0.0 && box.b_lo > 0.0, "bounds box needs strictly positive lower bounds");
  require(box.a_hi >= box.a_lo && box.b_hi >= box.b_lo, "bounds box needs lo <= hi");
  require(std::isfinite(box.a_hi) && std::isfinite(box.b_hi), "bounds box must be finite");
}

inline void require_non_increasing(const BoundedMonotoneSeq& s, const char* who) {
  require<HypothesisViolation>(s.direction() == Direction::non_increasing,
                               std::string(who) + ": sequences must be non-increasing");
}

inline void require_positive(std::span<const double> s, const char* who) {
  require<HypothesisViolation>(std::all_of(s.begin(), s.end(), [](double v) { return v > 0.0; }),
                               std::string(who) + ": sequences must be strictly positive");
}

inline void require_same_length(std::size_t n, std::size_t m, const char* who) {
  require(n == m, std::string(who) + ": length mismatch");
}

/// Clamps a tiny negative alternating power sum to zero; a clearly negative
/// one means the monotonicity hypothesis was broken.
inline double nonneg_inner(double s, double scale, const char* who) {
  if (s < -comparison_tol(scale)) {
    throw NonPositiveInnerSum(std::string(who) + ": alternating power sum is negative");
  }
  return std::max(s, 0.0);
}

inline void require_denominator(double denom, double scale, const char* who) {
  if (degenerate_denominator(denom, scale)) {
    throw DegenerateDenominator(std::string(who) + ": denominator vanishes");
  }
}

inline BoundsBox box_of(const BoundedMonotoneSeq& a, const BoundedMonotoneSeq& b) {
  return {a.lo(), a.hi(), b.lo(), b.hi()};
}

inline double max_of(std::span<const double> s) { return *std::max_element(s.begin(), s.end()); }
inline double min_of(std::span<const double> s) { return *std::min_element(s.begin(), s.end()); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Reverse Hölder
// ---------------------------------------------------------------------------

/// A^{q-1}/b + B^{p-1}/a; always > 1.
inline double holder_constant(const BoundsBox& box, const ConjugateExponents& pq) {
  detail::require_box(box);
  const double c = std::pow(box.a_hi, pq.q() - 1.0) / box.b_lo + std::pow(box.b_hi, pq.p() - 1.0) / box.a_lo;
  if (!(c > 1.0)) throw std::logic_error("holder_constant: constant must exceed 1");
  return c;
}

struct HolderParts {
  double a_sum = 0.0;  // sum (-1)^{k+1} a_k^q
  double b_sum = 0.0;  // sum (-1)^{k+1} b_k^p
  double numerator = 0.0;
  double denominator = 0.0;
};

/// Fraction (sum a^q)^{1/q} (sum b^p)^{1/p} / sum a b with alternating signs.
/// No monotonicity or positivity is enforced here; used directly by witness
/// constructions that sit outside the constant's box (e.g. a zero tail).
inline HolderParts holder_fraction(std::span<const double> a, std::span<const double> b,
                                   const ConjugateExponents& pq) {
  detail::require_same_length(a.size(), b.size(), "holder");
  HolderParts h;
  h.a_sum = detail::nonneg_inner(alt_power_sum(a, pq.q()), std::pow(detail::max_of(a), pq.q()), "holder");
  h.b_sum = detail::nonneg_inner(alt_power_sum(b, pq.p()), std::pow(detail::max_of(b), pq.p()), "holder");
  h.denominator = alt_product_sum(a, b);
  double scale = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) scale = std::max(scale, a[k] * b[k]);
  detail::require_denominator(h.denominator, scale, "holder");
  h.numerator = std::pow(h.a_sum, 1.0 / pq.q()) * std::pow(h.b_sum, 1.0 / pq.p());
  return h;
}

inline RatioReport holder_ratio(const BoundedMonotoneSeq& a, const BoundedMonotoneSeq& b,
                                const ConjugateExponents& pq, double tol_rel = kTolCmp) {
  detail::require_same_length(a.size(), b.size(), "holder");
  detail::require_non_increasing(a, "holder");
  detail::require_non_increasing(b, "holder");
  detail::require_positive(a.values(), "holder");
  detail::require_positive(b.values(), "holder");
  const auto h = holder_fraction(a.values(), b.values(), pq);
  RatioReport r;
  r.functional = "holder";
  r.n = a.size();
  r.p = pq.p();
  r.q = pq.q();
  r.numerator = h.numerator;
  r.denominator = h.denominator;
  r.ratio = h.numerator / h.denominator;
  r.box = detail::box_of(a, b);
  r.bound = holder_constant(*r.box, pq);
  return judge(std::move(r), tol_rel);
}

/// a = {c_1, c_1, c_2, c_2, ...} from `plateau` (length n/2); every pair of
/// a cancels, so the Hölder fraction is exactly 0 whenever b has at least one
/// unequal pair b_{2k-1} != b_{2k}.
inline SeqPair holder_zero_witness(std::size_t n_even, const Seq& plateau, const Seq& b) {
  detail::require(n_even >= 2 && n_even % 2 == 0, "holder_zero_witness: n must be even and >= 2");
  detail::require(plateau.size() == n_even / 2, "holder_zero_witness: plateau must have n/2 entries");
  detail::require(b.size() == n_even, "holder_zero_witness: b must have n entries");
  bool some_gap = false;
  for (std::size_t i = 0; i < n_even; i += 2) some_gap = some_gap || b[i] != b[i + 1];
  detail::require(some_gap, "holder_zero_witness: b must have an unequal pair b_{2k-1} != b_{2k}");
  std::vector<double> a;
  a.reserve(n_even);
  for (double c : plateau.values()) {
    a.push_back(c);
    a.push_back(c);
  }
  return {BoundedMonotoneSeq(std::move(a), Direction::non_increasing),
          BoundedMonotoneSeq(b.vec(), Direction::non_increasing)};
}

/// Odd-length instance with a = 1, last element of b equal to 0, b_{2n} =
/// `b_tail` and total pair gap sum (b_{2k-1} - b_{2k}) = `gap`, split evenly
/// over `pairs` pairs.
inline std::pair<std::vector<double>, std::vector<double>> holder_blowup_instance(double b_tail, double gap,
                                                                                  std::size_t pairs = 1) {
  detail::require(b_tail > 0.0 && gap > 0.0 && pairs >= 1, "holder blow-up: need b_tail, gap > 0");
  const double g = gap / static_cast<double>(pairs);
  std::vector<double> b;
  for (std::size_t k = 1; k <= pairs; ++k) {
    const double even = b_tail + static_cast<double>(pairs - k) * (1.0 + g);
    b.push_back(even + g);
    b.push_back(even);
  }
  b.push_back(0.0);
  return {std::vector<double>(b.size(), 1.0), std::move(b)};
}

/// Lower estimate p^{1/p} (b_{2n} / gap)^{1-1/p} for the blow-up family.
inline double holder_blowup_estimate(const ConjugateExponents& pq, double b_tail, double gap) {
  return std::pow(pq.p(), 1.0 / pq.p()) * std::pow(b_tail / gap, 1.0 - 1.0 / pq.p());
}

inline WitnessTrace holder_blowup_trace(const ConjugateExponents& pq, double b_tail, std::span<const double> gap_grid,
                                        std::size_t pairs = 1) {
  detail::require(b_tail > 0.0, "holder_blowup_trace: b_tail must be positive");
  detail::require(!gap_grid.empty(), "holder_blowup_trace: empty grid");
  for (std::size_t i = 0; i < gap_grid.size(); ++i) {
    detail::require(gap_grid[i] > 0.0, "holder_blowup_trace: gaps must be positive");
    detail::require(i == 0 || gap_grid[i] < gap_grid[i - 1], "holder_blowup_trace: gaps must decrease");
  }
  WitnessTrace t{"holder_blowup", "gap", pq.p(), {}};
  for (double g : gap_grid) {
    const auto [a, b] = holder_blowup_instance(b_tail, g, pairs);
    const auto h = holder_fraction(a, b, pq);
    const double ratio = h.numerator / h.denominator;
    const double est = holder_blowup_estimate(pq, b_tail, g);
    t.points.push_back({g, ratio, est, ratio - est});
  }
  return t;
}

// ---------------------------------------------------------------------------
// Cauchy type
// ---------------------------------------------------------------------------

/// (1/2) max{A/a + a/A, B/b + b/B}.
inline double cauchy_constant(const BoundsBox& box) {
  detail::require_box(box);
  return 0.5 * std::max(box.a_hi / box.a_lo + box.a_lo / box.a_hi, box.b_hi / box.b_lo + box.b_lo / box.b_hi);
}

inline bool quotient_monotone(std::span<const double> a, std::span<const double> b) {
  std::vector<double> c(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] / b[k];
  const double tol = kTolMonoUser * detail::max_of(c);
  return validate_monotone(c, Direction::non_increasing, tol) || validate_monotone(c, Direction::non_decreasing, tol);
}

inline RatioReport cauchy_ratio(const BoundedMonotoneSeq& a, const BoundedMonotoneSeq& b, double tol_rel = kTolCmp) {
  detail::require_same_length(a.size(), b.size(), "cauchy");
  detail::require_non_increasing(a, "cauchy");
  detail::require_non_increasing(b, "cauchy");
  detail::require_positive(a.values(), "cauchy");
  detail::require_positive(b.values(), "cauchy");
  if (!quotient_monotone(a.values(), b.values())) {
    throw QuotientNotMonotone("cauchy: quotient a_k/b_k is not monotone");
  }
  const double sa = detail::nonneg_inner(alt_power_sum(a.values(), 2.0), a[0] * a[0], "cauchy");
  const double sb = detail::nonneg_inner(alt_power_sum(b.values(), 2.0), b[0] * b[0], "cauchy");
  const double sab = alt_product_sum(a.values(), b.values());
  double scale = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) scale = std::max(scale, a[k] * b[k]);
  detail::require_denominator(sab, scale, "cauchy");
  RatioReport r;
  r.functional = "cauchy";
  r.n = a.size();
  r.p = 2.0;
  r.q = 2.0;
  r.numerator = sa * sb;
  r.denominator = sab * sab;
  r.ratio = r.numerator / r.denominator;
  r.box = detail::box_of(a, b);
  const double c = cauchy_constant(*r.box);
  r.bound = c * c;
  return judge(std::move(r), tol_rel);
}

/// s = (1/2) max(A/b + b/A, a/B + B/a).
inline double zhuang_constant(const BoundsBox& box) {
  detail::require_box(box);
  return 0.5 * std::max(box.a_hi / box.b_lo + box.b_lo / box.a_hi, box.a_lo / box.b_hi + box.b_hi / box.a_lo);
}

/// Positive-term bracket 1 <= sum a^2 sum b^2 / (sum ab)^2 <= s^2 with
/// s = (1/2) max(A/b + b/A, a/B + B/a). `box` defaults to the tight box.
inline RatioReport zhuang_check(const Seq& a, const Seq& b, std::optional<BoundsBox> box = std::nullopt,
                                double tol_rel = kTolCmp) {
  detail::require_same_length(a.size(), b.size(), "zhuang");
  detail::require_positive(a.values(), "zhuang");
  detail::require_positive(b.values(), "zhuang");
  const BoundsBox bx = box.value_or(BoundsBox{detail::min_of(a.values()), detail::max_of(a.values()),
                                              detail::min_of(b.values()), detail::max_of(b.values())});
  detail::require_box(bx);
  detail::require(detail::min_of(a.values()) >= bx.a_lo && detail::max_of(a.values()) <= bx.a_hi &&
                      detail::min_of(b.values()) >= bx.b_lo && detail::max_of(b.values()) <= bx.b_hi,
                  "zhuang: sequences leave the box");
  detail::CompensatedSum saa, sbb, sab;
  for (std::size_t k = 0; k < a.size(); ++k) {
    saa.add(a[k] * a[k]);
    sbb.add(b[k] * b[k]);
    sab.add(a[k] * b[k]);
  }
  const double s = zhuang_constant(bx);
  RatioReport r;
  r.functional = "zhuang";
  r.n = a.size();
  r.p = 2.0;
  r.q = 2.0;
  r.numerator = saa.value() * sbb.value();
  r.denominator = sab.value() * sab.value();
  r.ratio = r.numerator / r.denominator;
  r.lower = 1.0;
  r.bound = s * s;
  r.box = bx;
  return judge(std::move(r), tol_rel);
}

// ---------------------------------------------------------------------------
// Minkowski type
// ---------------------------------------------------------------------------

inline double minkowski_constant(double p) {
  detail::require(p > 0.0, "minkowski_constant: p must be positive");
  return p >= 1.0 ? std::pow(2.0, 1.0 - 1.0 / p) : std::pow(2.0, 1.0 / p - 1.0);
}

/// For p >= 1: (||a|| + ||b||) / ||a + b|| with the alternating p-functional,
/// bounded by 2^{1-1/p}. For 0 < p < 1 the reciprocal fraction is reported
/// against 2^{1/p-1}.
inline RatioReport minkowski_alt_ratio(const BoundedMonotoneSeq& a, const BoundedMonotoneSeq& b, double p,
                                       double tol_rel = kTolCmp) {
  detail::require_same_length(a.size(), b.size(), "minkowski_alt");
  detail::require_non_increasing(a, "minkowski_alt");
  detail::require_non_increasing(b, "minkowski_alt");
  detail::require(std::isfinite(p) && p > 0.0, "minkowski_alt: p must be positive");
  const double top = std::pow(a[0] + b[0], p);
  const double sa = detail::nonneg_inner(alt_power_sum(a.values(), p), std::pow(a[0], p), "minkowski_alt");
  const double sb = detail::nonneg_inner(alt_power_sum(b.values(), p), std::pow(b[0], p), "minkowski_alt");
  const double sab = detail::nonneg_inner(alt_power_sum_of_sums(a.values(), b.values(), p), top, "minkowski_alt");
  const double split = std::pow(sa, 1.0 / p) + std::pow(sb, 1.0 / p);
  const double joint = std::pow(sab, 1.0 / p);
  RatioReport r;
  r.functional = "minkowski_alt";
  r.n = a.size();
  r.p = p;
  if (p >= 1.0) {
    detail::require_denominator(sab, top, "minkowski_alt");
    r.numerator = split;
    r.denominator = joint;
  } else {
    detail::require_denominator(sa + sb, top, "minkowski_alt");
    r.numerator = joint;
    r.denominator = split;
  }
  r.ratio = r.numerator / r.denominator;
  r.bound = minkowski_constant(p);
  r.box = detail::box_of(a, b);
  return judge(std::move(r), tol_rel);
}

/// sum (-1)^{k+1}(a_k^p + b_k^p) <= sum (-1)^{k+1}(a_k + b_k)^p for p >= 1,
/// reversed for 0 < p < 1.
inline RatioReport alt_superadditivity_check(const BoundedMonotoneSeq& a, const BoundedMonotoneSeq& b, double p,
                                             double tol_rel = kTolCmp) {
  detail::require_same_length(a.size(), b.size(), "alt_superadditivity");
  detail::require_non_increasing(a, "alt_superadditivity");
  detail::require_non_increasing(b, "alt_superadditivity");
  detail::require(std::isfinite(p) && p > 0.0, "alt_superadditivity: p must be positive");
  const double split = alt_power_sum(a.values(), p) + alt_power_sum(b.values(), p);
  const double joint = alt_power_sum_of_sums(a.values(), b.values(), p);
  RatioReport r;
  r.functional = "alt_superadditivity";
  r.n = a.size();
  r.p = p;
  r.numerator = p >= 1.0 ? split : joint;
  r.ratio = r.numerator;
  r.bound = p >= 1.0 ? joint : split;
  return judge(std::move(r), tol_rel);
}

/// f(x, y) = (x+y)^p - x^p - y^p, whose termwise monotonicity along two
/// non-increasing sequences drives the superadditivity step.
inline double minkowski_gap_term(double x, double y, double p) {
  return std::pow(x + y, p) - std::pow(x, p) - std::pow(y, p);
}

/// a = {1, 1, 1}, b = {t, (t^p - 1)^{1/p}, 0}, t > 1.
inline SeqPair minkowski_eps_b_witness(double p, double t) {
  detail::require(p > 0.0 && t > 1.0, "minkowski eps_b witness: need p > 0 and b > 1");
  const double c = t * std::exp(std::log1p(-std::pow(t, -p)) / p);
  return {BoundedMonotoneSeq({1.0, 1.0, 1.0}, Direction::non_increasing, std::nullopt, 0.0),
          BoundedMonotoneSeq({t, c, 0.0}, Direction::non_increasing, std::nullopt, 0.0)};
}

/// Closed form 2 / ((1+b)^p - (1+(b^p-1)^{1/p})^p + 1)^{1/p}.
inline double minkowski_eps_b_value(double p, double t) {
  detail::require(p > 0.0 && t > 1.0, "minkowski eps_b value: need p > 0 and b > 1");
  const double drop = -t * std::expm1(std::log1p(-std::pow(t, -p)) / p);  // b - (b^p - 1)^{1/p}
  const double c = t - drop;
  const double head = detail::pow_diff(1.0 + t, 1.0 + c, drop, p);
  return 2.0 / std::pow(head + 1.0, 1.0 / p);
}

inline WitnessTrace minkowski_sharpness_trace(double p, std::span<const double> b_grid) {
  detail::require(p > 1.0, "minkowski_sharpness_trace: p must exceed 1");
  detail::require(!b_grid.empty(), "minkowski_sharpness_trace: empty grid");
  for (std::size_t i = 0; i < b_grid.size(); ++i) {
    detail::require(b_grid[i] > 1.0, "minkowski_sharpness_trace: grid entries must exceed 1");
    detail::require(i == 0 || b_grid[i] > b_grid[i - 1], "minkowski_sharpness_trace: grid must increase");
  }
  const double bound = minkowski_constant(p);
  WitnessTrace t{"minkowski_eps_b", "b", p, {}};
  for (double v : b_grid) {
    const double f = minkowski_eps_b_value(p, v);
    t.points.push_back({v, f, bound, bound - f});
  }
  return t;
}

/// (sum (-1)^{k+1} x_k^p)^{1/p}, 0 < p < 1.
inline double quasi_norm(const BoundedMonotoneSeq& x, double p) {
  detail::require(p > 0.0 && p < 1.0, "quasi_norm: p must lie in (0, 1)");
  detail::require_non_increasing(x, "quasi_norm");
  const double s = detail::nonneg_inner(alt_power_sum(x.values(), p), std::pow(x[0], p), "quasi_norm");
  return std::pow(s, 1.0 / p);
}

inline double quasi_norm_constant(double p) {
  detail::require(p > 0.0 && p < 1.0, "quasi_norm_constant: p must lie in (0, 1)");
  return std::pow(2.0, 1.0 / p - 1.0);
}

/// Definiteness of x, homogeneity for each scalar, and the quasi-triangle
/// inequality ||x + y|| <= K (||x|| + ||y||), in that order.
inline std::vector<RatioReport> quasi_norm_axiom_suite(const BoundedMonotoneSeq& x, const BoundedMonotoneSeq& y,
                                                       double p, std::span<const double> scalars,
                                                       double tol_rel = kTolCmp) {
  detail::require_same_length(x.size(), y.size(), "quasi_norm_axiom_suite");
  std::vector<RatioReport> out;
  const double nx = quasi_norm(x, p);
  const double ny = quasi_norm(y, p);

  const bool zero = std::all_of(x.values().begin(), x.values().end(), [](double v) { return v == 0.0; });
  RatioReport def;
  def.functional = "quasi_norm_definiteness";
  def.n = x.size();
  def.p = p;
  def.numerator = nx;
  def.ratio = nx;
  def.bound = nx;
  def = judge(std::move(def), tol_rel);
  def.holds = (nx == 0.0) == zero;
  out.push_back(std::move(def));

  for (double lambda : scalars) {
    detail::require(std::isfinite(lambda), "quasi_norm_axiom_suite: scalars must be finite");
    std::vector<double> scaled(x.values().begin(), x.values().end());
    for (auto& v : scaled) v *= std::fabs(lambda);
    RatioReport h;
    h.functional = "quasi_norm_homogeneity";
    h.n = x.size();
    h.p = p;
    h.numerator = quasi_norm(BoundedMonotoneSeq(std::move(scaled), Direction::non_increasing), p);
    h.ratio = h.numerator;
    h.bound = std::fabs(lambda) * nx;
    h.lower = h.bound;
    out.push_back(judge(std::move(h), tol_rel));
  }

  std::vector<double> sum(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) sum[k] = x[k] + y[k];
  RatioReport tri;
  tri.functional = "quasi_norm_triangle";
  tri.n = x.size();
  tri.p = p;
  tri.numerator = quasi_norm(BoundedMonotoneSeq(std::move(sum), Direction::non_increasing), p);
  tri.denominator = nx + ny;
  // judged on the inner sums; the 1/p power only rescales
  detail::require_denominator(std::pow(nx, p) + std::pow(ny, p), std::pow(std::max(x[0], y[0]), p),
                              "quasi_norm_triangle");
  detail::require(tri.denominator > 0.0, "quasi_norm_triangle: both norms vanish");
  tri.ratio = tri.numerator / tri.denominator;
  tri.bound = quasi_norm_constant(p);
  out.push_back(judge(std::move(tri), tol_rel));
  return out;
}

/// Non-negative terms: 1 <= (||a||_p + ||b||_p) / ||a + b||_p <= 2^{1-1/p}.
inline RatioReport reverse_minkowski_ratio(const Seq& a, const Seq& b, double p, double tol_rel = kTolCmp) {
  detail::require_same_length(a.size(), b.size(), "reverse_minkowski");
  detail::require(std::isfinite(p) && p >= 1.0, "reverse_minkowski: p must be >= 1");
  detail::CompensatedSum sa, sb, sab;
  double scale = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    sa.add(std::pow(a[k], p));
    sb.add(std::pow(b[k], p));
    const double t = std::pow(a[k] + b[k], p);
    sab.add(t);
    scale = std::max(scale, t);
  }
  if (!(sab.value() >= kDenomAbsFloor)) throw DegenerateDenominator("reverse_minkowski: both sequences vanish");
  RatioReport r;
  r.functional = "reverse_minkowski";
  r.n = a.size();
  r.p = p;
  r.numerator = std::pow(sa.value(), 1.0 / p) + std::pow(sb.value(), 1.0 / p);
  r.denominator = std::pow(sab.value(), 1.0 / p);
  r.ratio = r.numerator / r.denominator;
  r.lower = 1.0;
  r.bound = std::pow(2.0, 1.0 - 1.0 / p);
  return judge(std::move(r), tol_rel);
}

/// a = n ones, b = {n^{1/p}, 0, ..., 0}.
inline std::pair<Seq, Seq> reverse_minkowski_eps_n_witness(double p, std::size_t n) {
  detail::require(p >= 1.0 && n >= 1, "reverse minkowski eps_n witness: need p >= 1 and n >= 1");
  std::vector<double> b(n, 0.0);
  b[0] = std::pow(static_cast<double>(n), 1.0 / p);
  return {Seq(std::vector<double>(n, 1.0)), Seq(std::move(b))};
}

/// Closed form 2 (1 - 1/n + (1 + n^{-1/p})^p)^{-1/p}.
inline double reverse_minkowski_eps_n_value(double p, std::size_t n) {
  detail::require(p >= 1.0 && n >= 1, "reverse minkowski eps_n value: need p >= 1 and n >= 1");
  const double nn = static_cast<double>(n);
  return 2.0 * std::pow(1.0 - 1.0 / nn + std::pow(1.0 + std::pow(nn, -1.0 / p), p), -1.0 / p);
}

inline WitnessTrace reverse_minkowski_sharpness_trace(double p, std::span<const std::size_t> n_grid) {
  detail::require(p >= 1.0, "reverse_minkowski_sharpness_trace: p must be >= 1");
  detail::require(!n_grid.empty(), "reverse_minkowski_sharpness_trace: empty grid");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    detail::require(n_grid[i] >= 1, "reverse_minkowski_sharpness_trace: grid entries must be positive");
    detail::require(i == 0 || n_grid[i] > n_grid[i - 1], "reverse_minkowski_sharpness_trace: grid must increase");
  }
  const double bound = std::pow(2.0, 1.0 - 1.0 / p);
  WitnessTrace t{"reverse_minkowski_eps_n", "n", p, {}};
  for (std::size_t n : n_grid) {
    // p = 1 collapses the ratio to 1 identically.
    const double f = p == 1.0 ? 1.0 : reverse_minkowski_eps_n_value(p, n);
    t.points.push_back({static_cast<double>(n), f, bound, bound - f});
  }
  return t;
}

// ---------------------------------------------------------------------------
// Power-mean bracket for odd-length sequences
// ---------------------------------------------------------------------------

/// 1 <= (sum x^R)^{1/R} / (sum x^r)^{1/r} <= (1/x_lo)(1 + x_hi^R)^{1/r} with
/// alternating signs, odd length, integers 1 <= r <= R.
inline RatioReport power_ratio_bracket(const BoundedMonotoneSeq& x, int r, int R, double tol_rel = kTolCmp) {
  detail::require(r >= 1 && R >= r, "power_ratio_bracket: need integers 1 <= r <= R");
  detail::require(x.size() % 2 == 1, "power_ratio_bracket: sequence length must be odd");
  detail::require_non_increasing(x, "power_ratio_bracket");
  detail::require_positive(x.values(), "power_ratio_bracket");
  detail::require(x.lo() > 0.0, "power_ratio_bracket: box lower bound must be positive");
  const double s_big = detail::nonneg_inner(alt_power_sum(x.values(), R), std::pow(x[0], R), "power_ratio_bracket");
  const double s_small = detail::nonneg_inner(alt_power_sum(x.values(), r), std::pow(x[0], r), "power_ratio_bracket");
  RatioReport rep;
  rep.functional = "power_ratio";
  rep.n = x.size();
  rep.p = static_cast<double>(R) / static_cast<double>(r);
  rep.numerator = std::pow(s_big, 1.0 / R);
  rep.denominator = std::pow(s_small, 1.0 / r);
  rep.ratio = rep.numerator / rep.denominator;
  rep.lower = 1.0;
  rep.bound = std::pow(1.0 + std::pow(x.hi(), R), 1.0 / r) / x.lo();
  rep.box = BoundsBox{x.lo(), x.hi(), x.lo(), x.hi()};
  return judge(std::move(rep), tol_rel);
}

// ---------------------------------------------------------------------------
// Jensen-type oracles
// ---------------------------------------------------------------------------

/// A function on [0, x_max] asserted convex. Builtins are checked for
/// midpoint convexity on a 33-point grid at construction; custom functions
/// carry the caller's assertion.
class ConvexFn {
 public:
  enum class Kind { power, exponential, custom };

  static ConvexFn power(double p, double x_max) {
    detail::require(p >= 1.0, "ConvexFn::power: p must be >= 1");
    ConvexFn f(Kind::power, "x^" + trimmed(p), [p](double x) { return std::pow(x, p); }, x_max);
    f.verify_grid();
    return f;
  }

  /// e^x - 1.
  static ConvexFn exponential(double x_max) {
    ConvexFn f(Kind::exponential, "exp(x)-1", [](double x) { return std::expm1(x); }, x_max);
    f.verify_grid();
    return f;
  }

  static ConvexFn custom(std::function<double(double)> eval, double x_max, bool declared_convex,
                         std::string name = "custom") {
    detail::require(declared_convex, "ConvexFn::custom: caller must assert convexity");
    return ConvexFn(Kind::custom, std::move(name), std::move(eval), x_max);
  }

  double operator()(double x) const { return eval_(x); }
  double x_max() const { return x_max_; }
  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  ConvexFn(Kind kind, std::string name, std::function<double(double)> eval, double x_max)
      : kind_(kind), name_(std::move(name)), eval_(std::move(eval)), x_max_(x_max) {
    detail::require(std::isfinite(x_max) && x_max >= 0.0, "ConvexFn: domain bound must be finite and >= 0");
  }

  static std::string trimmed(double p) {
    std::string s = std::to_string(p);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  }

  void verify_grid() const {
    constexpr int kPoints = 33;
    std::vector<double> xs(kPoints), fs(kPoints);
    for (int i = 0; i < kPoints; ++i) {
      xs[i] = x_max_ * i / (kPoints - 1);
      fs[i] = eval_(xs[i]);
    }
    for (int i = 0; i < kPoints; ++i) {
      for (int j = i + 1; j < kPoints; ++j) {
        const double chord = 0.5 * (fs[i] + fs[j]);
        if (eval_(0.5 * (xs[i] + xs[j])) > chord + comparison_tol(chord, 1e-12)) {
          throw InvalidArgument("ConvexFn: builtin failed the midpoint convexity check");
        }
      }
    }
  }

  Kind kind_;
  std::string name_;
  std::function<double(double)> eval_;
  double x_max_;
};

/// f(sum (-1)^{k+1} b_k) <= sum (-1)^{k+1} f(b_k) for odd-length non-increasing b.
inline RatioReport szego_check(const BoundedMonotoneSeq& b, const ConvexFn& f, double tol_rel = kTolCmp) {
  detail::require(b.size() % 2 == 1, "szego_check: sequence length must be odd");
  detail::require_non_increasing(b, "szego_check");
  detail::require(f.x_max() >= b[0], "szego_check: f is not defined on [0, b_1]");
  RatioReport r;
  r.functional = "szego";
  r.n = b.size();
  r.numerator = f(alt_sum(b.values()));
  r.ratio = r.numerator;
  r.bound = alt_map_sum(b.values(), f);
  return judge(std::move(r), tol_rel);
}

/// f(sum (-1)^{k+1} w_k b_k) <= (1 - sum (-1)^{k+1} w_k) f(0) + sum (-1)^{k+1} w_k f(b_k)
/// for weights 1 >= w_1 >= ... >= w_n >= 0 and non-increasing b.
inline RatioReport brunk_olkin_check(const BoundedMonotoneSeq& w, const BoundedMonotoneSeq& b, const ConvexFn& f,
                                     double tol_rel = kTolCmp) {
  detail::require_same_length(w.size(), b.size(), "brunk_olkin_check");
  detail::require<HypothesisViolation>(w.direction() == Direction::non_increasing && w[0] <= 1.0,
                                       "brunk_olkin_check: weights must satisfy 1 >= w_1 >= ... >= w_n >= 0");
  detail::require_non_increasing(b, "brunk_olkin_check");
  detail::require(f.x_max() >= b[0], "brunk_olkin_check: f is not defined on [0, b_1]");
  const auto wv = w.values();
  const auto bv = b.values();
  const double weighted = sum_pairs(w.size(), [&](std::size_t i, bool next) {
    if (!next) return wv[i] * f(bv[i]);
    const double fi = f(bv[i]);
    const double fj = f(bv[i + 1]);
    return wv[i] * (fi - fj) + fj * (wv[i] - wv[i + 1]);
  });
  RatioReport r;
  r.functional = "brunk_olkin";
  r.n = b.size();
  r.numerator = f(alt_product_sum(wv, bv));
  r.ratio = r.numerator;
  r.bound = (1.0 - alt_sum(wv)) * f(0.0) + weighted;
  return judge(std::move(r), tol_rel);
}

// ---------------------------------------------------------------------------
// Quotient-box constant for positive terms and the crossover exponent
// ---------------------------------------------------------------------------

/// 1 + 1/(m+1) - 1/(M+1), in [1, 2).
inline double bougoffa_constant(const QuotientBox& qb) {
  detail::require(std::isfinite(qb.m) && std::isfinite(qb.M) && qb.m > 0.0 && qb.M >= qb.m,
                  "quotient box needs 0 < m <= M < inf");
  return 1.0 + 1.0 / (qb.m + 1.0) - 1.0 / (qb.M + 1.0);
}

/// p* = ln 2 / (ln 2 - ln C_{m,M}); 2^{1-1/p} < C_{m,M} exactly for 1 <= p < p*.
inline double crossover_exponent(const QuotientBox& qb) {
  const double c = bougoffa_constant(qb);
  detail::require(c < 2.0, "crossover_exponent: constant must be below 2");
  return std::numbers::ln2 / (std::numbers::ln2 - std::log(c));
}

/// Positive-term Minkowski fraction against C_{m,M}; the quotient box
/// defaults to the tight one.
inline RatioReport bougoffa_check(const Seq& a, const Seq& b, double p, std::optional<QuotientBox> qb = std::nullopt,
                                  double tol_rel = kTolCmp) {
  detail::require_positive(a.values(), "bougoffa_check");
  detail::require_positive(b.values(), "bougoffa_check");
  auto r = reverse_minkowski_ratio(a, b, p, tol_rel);
  QuotientBox box{a[0] / b[0], a[0] / b[0]};
  for (std::size_t k = 0; k < a.size(); ++k) {
    box.m = std::min(box.m, a[k] / b[k]);
    box.M = std::max(box.M, a[k] / b[k]);
  }
  if (qb) {
    detail::require(qb->m <= box.m && qb->M >= box.M, "bougoffa_check: quotients leave the box");
    box = *qb;
  }
  r.functional = "bougoffa";
  r.bound = bougoffa_constant(box);
  return judge(std::move(r), tol_rel);
}

}  // namespace altineq
