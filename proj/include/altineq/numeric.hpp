#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace altineq {

/// Relative comparison tolerance used by every inequality check.
inline constexpr double kTolCmp = 1e-9;

/// Relative monotonicity slack for user-supplied sequences (times hi).
inline constexpr double kTolMonoUser = 1e-12;

/// Absolute and relative thresholds below which a denominator is degenerate.
inline constexpr double kDenomAbsFloor = 1e-300;
inline constexpr double kDenomRelFloor = 1e-12;

namespace detail {

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// x^p - y^p for x, y >= 0 and p > 0, where diff = x - y is supplied by the
/// caller (usually computed exactly from neighbouring elements). Close
/// arguments go through expm1/log1p so the difference keeps full precision.
inline double pow_diff(double x, double y, double diff, double p) {
  if (diff == 0.0) return 0.0;
  if (y == 0.0) return std::pow(x, p);
  const double t = diff / y;
  if (std::fabs(t) <= 1.0) return std::pow(y, p) * std::expm1(p * std::log1p(t));
  return std::pow(x, p) - std::pow(y, p);
}

inline bool degenerate_denominator(double denom, double scale) {
  const double mag = std::fabs(denom);
  return !(mag >= kDenomAbsFloor) || mag < kDenomRelFloor * scale;
}

/// Uniform double in [0, 1) from the top 53 bits; portable across standard
/// libraries, unlike std::uniform_real_distribution.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * unit_uniform(rng);
}

/// Integer uniform on [lo, hi] by rejection on the raw 64-bit draw.
inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r = rng();
  while (r >= limit) r = rng();
  return lo + static_cast<std::int64_t>(r % span);
}

/// Engine for stream `index` of a seeded family. std::seed_seq is fully
/// specified, so streams are reproducible across platforms.
inline std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace detail
}  // namespace altineq
