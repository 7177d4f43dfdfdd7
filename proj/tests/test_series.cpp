#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "altineq/series.hpp"

using namespace altineq;

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

TEST(Eta, ClassicalValues) {
  EXPECT_NEAR(eta(1.0).value, std::numbers::ln2, 1e-12);
  EXPECT_NEAR(eta(2.0).value, kPi2 / 12.0, 1e-12);
  // eta(4) = 7 pi^4 / 720
  EXPECT_NEAR(eta(4.0).value, 7.0 * kPi2 * kPi2 / 720.0, 1e-12);
  const auto e = eta(2.0);
  EXPECT_LE(e.est_error, kSeriesTol);
  EXPECT_GT(e.terms_used, 0u);
}

TEST(Eta, HalfAgainstTenMillionPairedTerms) {
  const std::size_t N = 10000000;
  const auto brute = eta_paired(0.5, N);
  const double acc = eta(0.5).value;
  // the limit sits between S_N and S_N + a_{N+1}
  EXPECT_GE(acc, brute.value - 1e-12);
  EXPECT_LE(acc, brute.value + brute.est_error + 1e-12);
  // and for a convex term sequence, close to the midpoint
  EXPECT_NEAR(acc, brute.value + 0.5 * brute.est_error, 1e-11);
}

TEST(Eta, TighterToleranceUsesMoreTerms) {
  const auto loose = eta(1.5, 1e-6);
  const auto tight = eta(1.5, 1e-14);
  EXPECT_LT(loose.terms_used, tight.terms_used);
  EXPECT_NEAR(loose.value, tight.value, 1e-6);
  EXPECT_LE(loose.est_error, 1e-6);
}

TEST(Eta, Errors) {
  EXPECT_THROW(eta(0.0), InvalidArgument);
  EXPECT_THROW(eta(-1.0), InvalidArgument);
  EXPECT_THROW(eta(2.0, 1e-15), InvalidArgument);
  EXPECT_THROW(eta_paired(1.0, 1), InvalidArgument);
}

TEST(Eta, IncreasingOnGrid) {
  double prev = 0.0;
  for (int i = 1; i <= 50; ++i) {
    const double s = 0.1 * i;
    const double v = eta(s).value;
    EXPECT_GT(v, prev) << s;
    prev = v;
  }
}

TEST(Eta, PairedFallbackWithinCertificate) {
  for (int i = 1; i <= 50; ++i) {
    const double s = 0.1 * i;
    const auto fast = eta(s);
    const auto slow = eta_paired(s, 2000);
    EXPECT_LE(std::fabs(fast.value - slow.value), fast.est_error + slow.est_error) << s;
  }
}

TEST(Zeta, Values) {
  EXPECT_NEAR(zeta_from_eta(2.0), kPi2 / 6.0, 1e-10);
  EXPECT_NEAR(zeta_from_eta(4.0), kPi2 * kPi2 / 90.0, 1e-10);
  // sum k^{-3} for k <= N, plus the midpoint integral tail 1 / (2 (N + 1/2)^2)
  const std::size_t N = 1000000;
  long double s = 0.0L;
  for (std::size_t k = N; k >= 1; --k) s += 1.0L / ((long double)k * k * k);
  s += 1.0L / (2.0L * (N + 0.5L) * (N + 0.5L));
  EXPECT_NEAR(zeta_from_eta(3.0), (double)s, 1e-12);
  EXPECT_THROW(zeta_from_eta(1.0), InvalidArgument);
  EXPECT_THROW(zeta_from_eta(1.0 + 1e-7), InvalidArgument);
  EXPECT_NO_THROW(zeta_from_eta(1.0 + 1e-5));
  EXPECT_THROW(zeta_from_eta(0.0), InvalidArgument);
}

TEST(FFunc, Examples) {
  const ConjugateExponents two(2.0);
  for (double a : {0.25, 1.0, 2.5}) EXPECT_NEAR(F_func(a, a, two), 1.0, 2 * kSeriesTol);
  EXPECT_LT(F_func(1.0, 2.0, two), 1.0 - 1e-6);
  const auto pq = ConjugateExponents::from_rational(3, 1);  // q = 3/2
  for (double beta : {0.25, 0.5, 1.0}) {
    const double alpha = pq.p() * beta / pq.q();
    EXPECT_NEAR(F_func(alpha, beta, pq), 1.0, 2 * kSeriesTol);
  }
  EXPECT_THROW(F_func(0.0, 1.0, two), InvalidArgument);
}

TEST(Harmonic, Examples) {
  const ConjugateExponents two(2.0);
  EXPECT_TRUE(harmonic_ineq_check(0.7, 0.7, two).equality);
  const auto r = harmonic_ineq_check(0.3, 1.7, two);
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(r.equality);
}

TEST(FScan, GridAndCurve) {
  std::vector<double> grid;
  for (int i = 1; i <= 12; ++i) grid.push_back(0.25 * i);
  const std::vector<ConjugateExponents> pqs{ConjugateExponents::from_rational(3, 2), ConjugateExponents(2.0),
                                            ConjugateExponents::from_rational(3, 1)};
  const auto scan = F_scan(pqs, grid);
  EXPECT_EQ(scan.rows.size(), 3u * 144u);
  EXPECT_EQ(scan.violations, 0u);
  EXPECT_LE(scan.max_F, 1.0 + 2 * kSeriesTol);
  EXPECT_GT(scan.curve_points, 0u);
  EXPECT_LE(scan.curve_max_deviation, 2 * kSeriesTol);
  // off the curve F stays visibly below 1
  for (const auto& row : scan.rows) {
    const auto& pq = row.p == 2.0 ? pqs[1] : (row.p == 1.5 ? pqs[0] : pqs[2]);
    if (!on_equality_curve(row.alpha, row.beta, pq)) {
      EXPECT_LT(row.F, 1.0 - 1e-6) << row.alpha << ' ' << row.beta << ' ' << row.p;
    }
    EXPECT_EQ(row.slack, 1.0 - row.F);
  }
}

TEST(Geometric, AlternatingSum) {
  for (double r : {0.0, 0.1, 0.5, 0.99}) {
    EXPECT_NEAR(alternating_geometric_sum(r, 200), r / (1.0 + r), 1e-15) << r;
    EXPECT_NEAR(alternating_geometric_sum(r, 3), r / (1.0 + r), 1e-15) << r;
  }
  EXPECT_THROW(alternating_geometric_sum(1.0, 10), InvalidArgument);
}

TEST(Geometric, Examples) {
  const ConjugateExponents two(2.0);
  const auto g = geometric_ineq_check(2, 2, two);
  EXPECT_NEAR(g.report.ratio, 0.2, 1e-16);
  EXPECT_NEAR(g.report.bound, 0.2, 1e-16);
  EXPECT_TRUE(g.report.equality);
  const auto h = geometric_ineq_check(2, 3, two);
  EXPECT_NEAR(h.report.ratio, 1.0 / (std::sqrt(5.0) * std::sqrt(10.0)), 1e-15);
  EXPECT_NEAR(h.report.bound, 1.0 / 7.0, 1e-15);
  EXPECT_FALSE(h.report.equality);
  for (double a : {1.1, 3.3, 10.0}) EXPECT_TRUE(geometric_ineq_check(a, a, two).report.equality);
  EXPECT_THROW(geometric_ineq_check(1.0, 2, two), InvalidArgument);
}

TEST(Geometric, GridHoldsAndSeriesMatch) {
  for (const auto& pq : {ConjugateExponents::from_rational(3, 2), ConjugateExponents(2.0),
                         ConjugateExponents::from_rational(3, 1)}) {
    for (double a : {1.1, 2.0, 5.0, 10.0}) {
      for (double b : {1.1, 2.0, 5.0, 10.0}) {
        const auto g = geometric_ineq_check(a, b, pq);
        EXPECT_TRUE(g.report.holds);
        EXPECT_LE(g.max_mismatch, 1e-12);
      }
    }
  }
}
