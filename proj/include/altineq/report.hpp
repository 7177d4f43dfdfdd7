#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "altineq/numeric.hpp"

namespace altineq {

/// Box bounds a <= a_k <= A, b <= b_k <= B.
struct BoundsBox {
  double a_lo = 0.0;
  double a_hi = 0.0;
  double b_lo = 0.0;
  double b_hi = 0.0;
};

/// Verdict for one inequality instance, always oriented as
/// `lower <= ratio <= bound`. Two-sided checks fill `lower`.
struct RatioReport {
  std::string functional;
  std::size_t n = 0;
  std::optional<double> p;
  std::optional<double> q;
  double numerator = 0.0;
  double denominator = 1.0;
  double ratio = 0.0;
  double bound = 0.0;
  std::optional<double> lower;
  double slack = 0.0;
  bool holds = false;
  bool equality = false;
  bool lower_equality = false;
  std::optional<BoundsBox> box;
};

/// Absolute comparison threshold for a right-hand side of magnitude `rhs`.
inline double comparison_tol(double rhs, double tol_rel = kTolCmp) {
  return tol_rel * std::fmax(1.0, std::fabs(rhs));
}

/// Fills slack/holds/equality for `ratio <= bound` (and `lower <= ratio`).
inline RatioReport judge(RatioReport r, double tol_rel = kTolCmp) {
  r.slack = r.bound - r.ratio;
  const double tol = comparison_tol(r.bound, tol_rel);
  r.holds = r.slack >= -tol;
  r.equality = std::fabs(r.slack) <= tol;
  if (r.lower) {
    const double ltol = comparison_tol(*r.lower, tol_rel);
    const double lslack = r.ratio - *r.lower;
    r.holds = r.holds && lslack >= -ltol;
    r.lower_equality = std::fabs(lslack) <= ltol;
  }
  if (std::isnan(r.ratio) || std::isnan(r.bound)) r.holds = false;
  return r;
}

/// One point of a witness family: parameter, ratio, reference bound, and
/// the gap between them.
struct TracePoint {
  double param = 0.0;
  double ratio = 0.0;
  double bound = 0.0;
  double gap = 0.0;
};

struct WitnessTrace {
  std::string family;
  std::string parameter;
  double p = 0.0;
  std::vector<TracePoint> points;
};

}  // namespace altineq
