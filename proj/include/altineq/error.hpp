#pragma once

#include <stdexcept>
#include <string>

namespace altineq {

/// Precondition or hypothesis violation on the caller's input.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A sequence does not satisfy the monotonicity or positivity an inequality needs.
class HypothesisViolation : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// The quotient sequence a_k / b_k is not monotone.
class QuotientNotMonotone : public HypothesisViolation {
 public:
  using HypothesisViolation::HypothesisViolation;
};

/// An alternating power sum that must be non-negative came out negative.
class NonPositiveInnerSum : public HypothesisViolation {
 public:
  using HypothesisViolation::HypothesisViolation;
};

/// The denominator of a ratio vanishes (or is lost in rounding).
class DegenerateDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// No feasible point exists for a search configuration.
class InfeasibleConfig : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

namespace detail {

template <class E = InvalidArgument>
inline void require(bool cond, const std::string& what) {
  if (!cond) throw E(what);
}

}  // namespace detail
}  // namespace altineq
