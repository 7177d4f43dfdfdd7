#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "altineq/io.hpp"

using namespace altineq;

TEST(Io, Fmt17RoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 2.0, -7.25e12, std::numbers::sqrt2}) {
    const auto s = fmt17(v);
    EXPECT_EQ(std::strtod(s.c_str(), nullptr), v) << s;
  }
  EXPECT_EQ(fmt17(0.1), "0.10000000000000001");
  EXPECT_EQ(fmt17(2.0), "2");
}

TEST(Io, SeqRoundTrip) {
  const Seq s({3.0, 0.1, 1.0 / 3.0});
  const auto back = seq_from_json(json::parse(to_json(s).dump()));
  EXPECT_EQ(back.vec(), s.vec());
  EXPECT_THROW(seq_from_json(json::parse("{\"a\":1}")), InvalidArgument);
  EXPECT_THROW(seq_from_json(json::parse("[1,\"x\"]")), InvalidArgument);
}

TEST(Io, GenSpecRoundTrip) {
  GenSpec g;
  g.n = 9;
  g.lo = 0.25;
  g.hi = 4.0;
  g.seed = 123456789012345ULL;
  g.direction = Direction::non_decreasing;
  g.distribution = Distribution::geometric_decay;
  const auto j = to_json(g);
  EXPECT_EQ(j["direction"], "non-decreasing");
  EXPECT_EQ(j["distribution"], "geometric-decay");
  const auto back = genspec_from_json(json::parse(j.dump()));
  EXPECT_EQ(back.n, g.n);
  EXPECT_EQ(back.lo, g.lo);
  EXPECT_EQ(back.hi, g.hi);
  EXPECT_EQ(back.seed, g.seed);
  EXPECT_EQ(back.direction, g.direction);
  EXPECT_EQ(back.distribution, g.distribution);
  EXPECT_EQ(generate(back), generate(g));
  EXPECT_THROW(genspec_from_json(json::parse("{\"n\":3}")), InvalidArgument);
  EXPECT_THROW(genspec_from_json(json::parse(R"({"n":3,"lo":0,"hi":1,"seed":1,"direction":"up"})")),
               InvalidArgument);
}

TEST(Io, RatioReportKeys) {
  const auto r = holder_ratio(BoundedMonotoneSeq::non_increasing({2, 1, 1}),
                              BoundedMonotoneSeq::non_increasing({1, 1, 0.5}), ConjugateExponents(2.0));
  const auto j = to_json(r);
  for (const char* k : {"functional", "n", "p", "q", "numerator", "denominator", "ratio", "bound", "slack", "holds",
                        "equality", "box"}) {
    EXPECT_TRUE(j.contains(k)) << k;
  }
  EXPECT_FALSE(j.contains("lower"));
  EXPECT_EQ(j["ratio"].get<double>(), r.ratio);

  const auto b = power_bracket_check(2, 1, 2);
  const auto jb = to_json(b);
  EXPECT_EQ(jb["lower"], 2.0);
  EXPECT_TRUE(jb.contains("lower_equality"));
}

TEST(Io, ShortestDoublesInJson) {
  // the dump must parse back to the same bits
  const json j{{"x", 0.1}, {"y", 1.0 / 3.0}};
  const auto back = json::parse(j.dump());
  EXPECT_EQ(back["x"].get<double>(), 0.1);
  EXPECT_EQ(back["y"].get<double>(), 1.0 / 3.0);
}

TEST(Io, CsvHeaders) {
  std::ostringstream os;
  const std::vector<double> grid{10.0, 100.0};
  write_csv(os, minkowski_sharpness_trace(2.0, grid));
  const auto text = os.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "param,ratio,bound,gap");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);

  std::ostringstream fs;
  const std::vector<double> g2{0.5, 1.0};
  const std::vector<ConjugateExponents> two{ConjugateExponents(2.0)};
  write_csv(fs, F_scan(two, g2));
  const auto t2 = fs.str();
  EXPECT_EQ(t2.substr(0, t2.find('\n')), "alpha,beta,p,F,slack");
  EXPECT_EQ(std::count(t2.begin(), t2.end(), '\n'), 5);
}

TEST(Io, SearchAndTraceJson) {
  SearchConfig c;
  c.n = 3;
  c.restarts = 2;
  c.max_evals = 200;
  const auto r = search(c);
  const auto j = to_json(c, r);
  EXPECT_EQ(j["functional"], "minkowski_alt");
  EXPECT_EQ(j["witness"]["a"].size(), 3u);
  EXPECT_EQ(j["best_value"].get<double>(), r.best_value);
  const std::vector<double> grid{10.0};
  const auto t = to_json(minkowski_sharpness_trace(2.0, grid));
  EXPECT_EQ(t["family"], "minkowski_eps_b");
  EXPECT_EQ(t["points"].size(), 1u);
}
