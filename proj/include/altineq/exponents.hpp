#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "altineq/error.hpp"

namespace altineq {

/// Exact exponent num/den, parsed from "3/2", "1.5" or "2".
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

inline Rational parse_rational(const std::string& text) {
  auto digits = [&](const std::string& s) {
    detail::require(!s.empty() && s.size() <= 15 && s.find_first_not_of("0123456789") == std::string::npos,
                    "malformed exponent '" + text + "'");
    return static_cast<std::int64_t>(std::stoll(s));
  };
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const Rational r{digits(text.substr(0, slash)), digits(text.substr(slash + 1))};
    detail::require(r.den > 0, "exponent denominator must be positive in '" + text + "'");
    return r;
  }
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string whole = text.substr(0, dot).empty() ? "0" : text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    return {digits(whole) * den + (frac.empty() ? 0 : digits(frac)), den};
  }
  return {digits(text), 1};
}

/// Hölder conjugate pair p, q > 1 with 1/p + 1/q = 1.
class ConjugateExponents {
 public:
  explicit ConjugateExponents(double p) : p_(p), q_(p / (p - 1.0)) {
    detail::require(std::isfinite(p) && p > 1.0, "conjugate exponents need p > 1");
    check();
  }

  /// p = num/den taken exactly; q = num/(num-den) rounds once.
  static ConjugateExponents from_rational(std::int64_t num, std::int64_t den) {
    detail::require(den > 0 && num > den, "conjugate exponents need num/den > 1");
    return ConjugateExponents(static_cast<double>(num) / static_cast<double>(den),
                              static_cast<double>(num) / static_cast<double>(num - den));
  }

  static ConjugateExponents from_rational(const Rational& r) { return from_rational(r.num, r.den); }

  double p() const { return p_; }
  double q() const { return q_; }

 private:
  ConjugateExponents(double p, double q) : p_(p), q_(q) { check(); }
  void check() const {
    detail::require(std::fabs(1.0 / p_ + 1.0 / q_ - 1.0) <= 1e-12, "1/p + 1/q must equal 1");
  }

  double p_;
  double q_;
};

}  // namespace altineq
