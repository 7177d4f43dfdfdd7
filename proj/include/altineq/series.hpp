#pragma once

// Dirichlet eta eta(s) = sum (-1)^{k+1} k^{-s} = (1 - 2^{1-s}) zeta(s), s > 0,
// and the harmonic/geometric alternating-series Hölder inequalities.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "altineq/error.hpp"
#include "altineq/exponents.hpp"
#include "altineq/numeric.hpp"
#include "altineq/report.hpp"

namespace altineq {

inline constexpr double kSeriesTol = 1e-12;

struct EtaResult {
  double s = 0.0;
  double value = 0.0;
  double est_error = 0.0;
  std::size_t terms_used = 0;
};

namespace detail {

inline constexpr double kCvzBase = 3.0 + 2.0 * std::numbers::sqrt2;  // 3 + sqrt(8)

/// Cohen-Rodriguez Villegas-Zagier acceleration of sum_{k>=0} (-1)^k a_k for
/// a_k = (k+1)^{-s}, using n terms. Returns the value and a certified bound
/// 2 a_0 / (3+sqrt 8)^n plus a rounding allowance.
inline std::pair<double, double> cvz_eta(double s, std::size_t n) {
  double d = std::pow(kCvzBase, static_cast<double>(n));
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  CompensatedSum acc;
  const double nn = static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double kk = static_cast<double>(k);
    c = b - c;
    acc.add(c * std::pow(kk + 1.0, -s));
    b = (kk + nn) * (kk - nn) * b / ((kk + 0.5) * (kk + 1.0));
  }
  const double truncation = 2.0 / std::pow(kCvzBase, nn);
  const double rounding = 2.0 * nn * std::numeric_limits<double>::epsilon();
  return {acc.value() / d, truncation + rounding};
}

}  // namespace detail

/// eta(s) to absolute accuracy `tol` (>= 1e-14).
inline EtaResult eta(double s, double tol = kSeriesTol) {
  detail::require(std::isfinite(s) && s > 0.0, "eta: s must be positive");
  detail::require(tol >= 1e-14, "eta: tolerance below 1e-14 is not supported");
  std::size_t n = static_cast<std::size_t>(std::ceil(std::log(4.0 / tol) / std::log(detail::kCvzBase)));
  n = std::max<std::size_t>(n, 2);
  const auto [value, err] = detail::cvz_eta(s, n);
  if (err > tol) throw std::logic_error("eta: error certificate exceeds the requested tolerance");
  return {s, value, err, n};
}

/// Paired partial sum of the first `terms` terms (rounded up to even) with
/// the alternating remainder bound |a_{terms+1}| as certificate.
inline EtaResult eta_paired(double s, std::size_t terms) {
  detail::require(std::isfinite(s) && s > 0.0, "eta_paired: s must be positive");
  detail::require(terms >= 2, "eta_paired: need at least two terms");
  if (terms % 2 == 1) ++terms;
  detail::CompensatedSum acc;
  for (std::size_t k = 2; k <= terms; k += 2) {
    const double even = static_cast<double>(k);
    // (k-1)^{-s} - k^{-s}
    acc.add(std::pow(even, -s) * std::expm1(-s * std::log1p(-1.0 / even)));
  }
  return {s, acc.value(), std::pow(static_cast<double>(terms + 1), -s), terms};
}

/// 1 - 2^{1-s}.
inline double eta_zeta_factor(double s) { return -std::expm1((1.0 - s) * std::numbers::ln2); }

/// zeta(s) = eta(s) / (1 - 2^{1-s}), s > 0, |s - 1| >= 1e-6.
inline double zeta_from_eta(double s, double tol = kSeriesTol) {
  detail::require(std::isfinite(s) && s > 0.0, "zeta_from_eta: s must be positive");
  detail::require(std::fabs(s - 1.0) >= 1e-6, "zeta_from_eta: s is too close to the pole at 1");
  return eta(s, tol).value / eta_zeta_factor(s);
}

/// F(alpha, beta) = eta(q alpha)^{1/q} eta(p beta)^{1/p} / eta(alpha + beta).
inline double F_func(double alpha, double beta, const ConjugateExponents& pq, double tol = kSeriesTol) {
  detail::require(alpha > 0.0 && beta > 0.0, "F_func: alpha and beta must be positive");
  const double lhs = std::pow(eta(pq.q() * alpha, tol).value, 1.0 / pq.q()) *
                     std::pow(eta(pq.p() * beta, tol).value, 1.0 / pq.p());
  return lhs / eta(alpha + beta, tol).value;
}

/// eta(q alpha)^{1/q} eta(p beta)^{1/p} <= eta(alpha + beta).
inline RatioReport harmonic_ineq_check(double alpha, double beta, const ConjugateExponents& pq,
                                       double tol = kSeriesTol, double tol_rel = kTolCmp) {
  detail::require(alpha > 0.0 && beta > 0.0, "harmonic_ineq_check: alpha and beta must be positive");
  RatioReport r;
  r.functional = "harmonic";
  r.p = pq.p();
  r.q = pq.q();
  r.numerator = std::pow(eta(pq.q() * alpha, tol).value, 1.0 / pq.q()) *
                std::pow(eta(pq.p() * beta, tol).value, 1.0 / pq.p());
  r.ratio = r.numerator;
  r.bound = eta(alpha + beta, tol).value;
  return judge(std::move(r), tol_rel);
}

struct FScanRow {
  double alpha = 0.0;
  double beta = 0.0;
  double p = 0.0;
  double F = 0.0;
  double slack = 0.0;  // 1 - F
};

struct FScan {
  std::vector<FScanRow> rows;
  double max_F = 0.0;
  double argmax_alpha = 0.0;
  double argmax_beta = 0.0;
  double argmax_p = 0.0;
  std::size_t violations = 0;       // F > 1 + 2 tol
  std::size_t curve_points = 0;     // grid points with q alpha == p beta
  double curve_max_deviation = 0.0; // max |F - 1| over those points
};

inline bool on_equality_curve(double alpha, double beta, const ConjugateExponents& pq) {
  return std::fabs(pq.q() * alpha - pq.p() * beta) <= 1e-12 * std::fmax(1.0, pq.q() * alpha);
}

/// Scans F over grid x grid for each exponent. Row order: p, then alpha, then beta.
inline FScan F_scan(std::span<const ConjugateExponents> exponents, std::span<const double> grid,
                    double tol = kSeriesTol) {
  detail::require(!grid.empty() && !exponents.empty(), "F_scan: empty grid");
  FScan out;
  out.max_F = -std::numeric_limits<double>::infinity();
  for (const auto& pq : exponents) {
    for (double alpha : grid) {
      for (double beta : grid) {
        const double f = F_func(alpha, beta, pq, tol);
        out.rows.push_back({alpha, beta, pq.p(), f, 1.0 - f});
        if (f > out.max_F) {
          out.max_F = f;
          out.argmax_alpha = alpha;
          out.argmax_beta = beta;
          out.argmax_p = pq.p();
        }
        if (f > 1.0 + 2.0 * tol) ++out.violations;
        if (on_equality_curve(alpha, beta, pq)) {
          ++out.curve_points;
          out.curve_max_deviation = std::fmax(out.curve_max_deviation, std::fabs(f - 1.0));
        }
      }
    }
  }
  return out;
}

/// sum_{k>=1} (-1)^{k+1} r^k from `terms` explicit terms plus the exact tail
/// (-1)^terms r^{terms+1} / (1 + r), 0 <= r < 1.
inline double alternating_geometric_sum(double r, std::size_t terms) {
  detail::require(r >= 0.0 && r < 1.0, "alternating_geometric_sum: need 0 <= r < 1");
  detail::CompensatedSum acc;
  double term = r;
  for (std::size_t k = 1; k <= terms; ++k) {
    acc.add(k % 2 == 1 ? term : -term);
    term *= r;
  }
  acc.add((terms % 2 == 0 ? 1.0 : -1.0) * term / (1.0 + r));
  return acc.value();
}

struct GeometricCheck {
  RatioReport report;     // (1+a^q)^{-1/q}(1+b^p)^{-1/p} <= (1+ab)^{-1}
  double lhs_series = 0.0;
  double rhs_series = 0.0;
  double max_mismatch = 0.0;  // closed form vs truncated series
};

inline GeometricCheck geometric_ineq_check(double a, double b, const ConjugateExponents& pq,
                                           std::size_t terms = 200, double tol_rel = kTolCmp) {
  detail::require(std::isfinite(a) && std::isfinite(b) && a > 1.0 && b > 1.0,
                  "geometric_ineq_check: need a, b > 1");
  const double p = pq.p();
  const double q = pq.q();
  GeometricCheck g;
  RatioReport& r = g.report;
  r.functional = "geometric";
  r.p = p;
  r.q = q;
  r.numerator = std::pow(1.0 + std::pow(a, q), -1.0 / q) * std::pow(1.0 + std::pow(b, p), -1.0 / p);
  r.ratio = r.numerator;
  r.bound = 1.0 / (1.0 + a * b);
  r = judge(std::move(r), tol_rel);
  g.lhs_series = std::pow(alternating_geometric_sum(std::pow(a, -q), terms), 1.0 / q) *
                 std::pow(alternating_geometric_sum(std::pow(b, -p), terms), 1.0 / p);
  g.rhs_series = alternating_geometric_sum(1.0 / (a * b), terms);
  g.max_mismatch = std::fmax(std::fabs(g.lhs_series - r.ratio), std::fabs(g.rhs_series - r.bound));
  return g;
}

}  // namespace altineq
