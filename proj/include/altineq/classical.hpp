#pragma once

// Two-point inequalities for alpha, beta >= 0: Jensen (and its reverse),
// Young, the power bracket for x^p - y^p, and superadditivity of x^p.
// std::pow(0, 0) == 1, which is the convention these statements need.

#include <cmath>
#include <utility>

#include "altineq/error.hpp"
#include "altineq/exponents.hpp"
#include "altineq/report.hpp"

namespace altineq {

struct TwoPointCase {
  double alpha = 0.0;
  double beta = 0.0;
  double p = 1.0;
};

namespace detail {

inline void require_two_point(double alpha, double beta) {
  require(std::isfinite(alpha) && std::isfinite(beta) && alpha >= 0.0 && beta >= 0.0,
          "alpha and beta must be finite and non-negative");
}

inline RatioReport two_point(const char* name, double p, double value, double bound, double tol_rel) {
  RatioReport r;
  r.functional = name;
  r.n = 2;
  r.p = p;
  r.numerator = value;
  r.ratio = value;
  r.bound = bound;
  return judge(std::move(r), tol_rel);
}

}  // namespace detail

/// (alpha+beta)^p <= 2^{p-1}(alpha^p + beta^p) for p >= 1, reversed for 0 < p < 1.
inline RatioReport jensen_check(const TwoPointCase& c, double tol_rel = kTolCmp) {
  detail::require_two_point(c.alpha, c.beta);
  detail::require(c.p > 0.0, "jensen_check: p must be positive");
  const double sum_pow = std::pow(c.alpha + c.beta, c.p);
  const double mean_pow = std::pow(2.0, c.p - 1.0) * (std::pow(c.alpha, c.p) + std::pow(c.beta, c.p));
  return c.p >= 1.0 ? detail::two_point("jensen", c.p, sum_pow, mean_pow, tol_rel)
                    : detail::two_point("jensen_reverse", c.p, mean_pow, sum_pow, tol_rel);
}

/// alpha*beta <= alpha^p/p + beta^q/q.
inline RatioReport young_check(double alpha, double beta, const ConjugateExponents& pq,
                               double tol_rel = kTolCmp) {
  detail::require_two_point(alpha, beta);
  const double p = pq.p();
  const double q = pq.q();
  auto r = detail::two_point("young", p, alpha * beta, std::pow(alpha, p) / p + std::pow(beta, q) / q, tol_rel);
  r.q = q;
  return r;
}

/// p beta^{p-1}(alpha-beta) <= alpha^p - beta^p <= p alpha^{p-1}(alpha-beta), alpha >= beta.
inline RatioReport power_bracket_check(double alpha, double beta, double p, double tol_rel = kTolCmp) {
  detail::require_two_point(alpha, beta);
  detail::require(p >= 1.0, "power_bracket_check: p must be >= 1");
  detail::require(alpha >= beta, "power_bracket_check: need alpha >= beta");
  const double d = alpha - beta;
  RatioReport r;
  r.functional = "power_bracket";
  r.n = 2;
  r.p = p;
  r.numerator = std::pow(alpha, p) - std::pow(beta, p);
  r.ratio = r.numerator;
  r.lower = p * std::pow(beta, p - 1.0) * d;
  r.bound = p * std::pow(alpha, p - 1.0) * d;
  return judge(std::move(r), tol_rel);
}

/// alpha^p + beta^p <= (alpha+beta)^p, p >= 1.
inline RatioReport superadditivity_check(double alpha, double beta, double p, double tol_rel = kTolCmp) {
  detail::require_two_point(alpha, beta);
  detail::require(p >= 1.0, "superadditivity_check: p must be >= 1");
  return detail::two_point("superadditivity", p, std::pow(alpha, p) + std::pow(beta, p),
                           std::pow(alpha + beta, p), tol_rel);
}

}  // namespace altineq
