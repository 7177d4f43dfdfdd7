#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cli.hpp"

using namespace altineq;
using altineq::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json j() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "altineq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json strip_time(json j) {
  j["manifest"].erase("timestamp");
  return j;
}

}  // namespace

TEST(Cli, VerifyMinkowski) {
  const auto r = run({"verify", "--functional", "minkowski_alt", "--trials", "20000", "--p", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.j();
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["manifest"]["command"], "verify");
  const auto& c = j["result"]["campaigns"][0];
  EXPECT_EQ(c["holds"], 20000);
  EXPECT_EQ(c["violations"], 0);
}

TEST(Cli, VerifyEmptyAndIndependent) {
  const auto e = run({"verify", "--functional", "holder", "--trials", "0"});
  EXPECT_EQ(e.code, 0);
  EXPECT_TRUE(e.j()["result"]["campaigns"][0]["worst_slack"].is_null());

  const auto c = run({"verify", "--functional", "cauchy", "--trials", "2000", "--generator", "independent"});
  EXPECT_EQ(c.code, 0);
  const auto rep = c.j()["result"]["campaigns"][0];
  EXPECT_GT(rep["errors"].get<int>(), 0);
  EXPECT_EQ(rep["violations"], 0);
}

TEST(Cli, VerifyCsvAndLists) {
  const auto r = run({"--format", "csv", "verify", "--functional", "jensen,young", "--trials", "100"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "functional,trials,holds,equalities,errors,violations,worst_slack,worst_trial");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Cli, Constants) {
  const auto r = run({"constants", "--box", "1,2,1,2", "--p", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto v = r.j()["result"];
  EXPECT_EQ(v["holder_C"], 4.0);
  EXPECT_EQ(v["cauchy_c"], 1.25);
  EXPECT_EQ(v["zhuang_s"], 1.25);
  EXPECT_NEAR(v["minkowski_2pow"].get<double>(), std::numbers::sqrt2, 1e-15);

  const auto q = run({"constants", "--quotient", "1,3"}).j()["result"];
  EXPECT_EQ(q["C_mM"], 1.25);
  EXPECT_NEAR(q["p_star"].get<double>(), 1.475, 5e-4);
  EXPECT_NEAR(q["p_star"].get<double>(), std::numbers::ln2 / (std::numbers::ln2 - std::log(1.25)), 1e-15);

  const auto pt = run({"constants", "--box", "1,1,1,1", "--p", "2"}).j()["result"];
  EXPECT_EQ(pt["cauchy_c"], 1.0);
  EXPECT_EQ(pt["zhuang_s"], 1.0);

  const auto t = run({"--format", "text", "constants", "--quotient", "1,3"});
  EXPECT_EQ(t.out.substr(0, t.out.find('\n')), "C_mM = 1.25");
  EXPECT_EQ(run({"constants", "--box", "1,2,1,2", "--p", "1/2"}).j()["result"]["quasi_norm_K"], 2.0);
}

TEST(Cli, Sharpness) {
  const auto m = run({"sharpness", "minkowski_eps_b", "--p", "2", "--grid", "10,100,1000"});
  ASSERT_EQ(m.code, 0) << m.err;
  const auto pts = m.j()["result"]["trace"]["points"];
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_GT(pts[0]["gap"].get<double>(), pts[1]["gap"].get<double>());
  EXPECT_GT(pts[1]["gap"].get<double>(), pts[2]["gap"].get<double>());
  EXPECT_LT(pts[2]["gap"].get<double>(), 1e-3);

  const auto z = run({"sharpness", "holder_zero", "--n", "4"});
  EXPECT_EQ(z.code, 0);
  EXPECT_EQ(z.j()["result"]["trace"]["points"][0]["ratio"], 0.0);

  const auto f = run({"sharpness", "reverse_minkowski_eps_n", "--p", "1"});
  EXPECT_EQ(f.code, 0);
  for (const auto& p : f.j()["result"]["trace"]["points"]) EXPECT_EQ(p["gap"], 0.0);

  const auto h = run({"sharpness", "holder_blowup", "--p", "2"});
  EXPECT_EQ(h.code, 0);
  EXPECT_GE(h.j()["result"]["trace"]["points"][3]["ratio"].get<double>(), 100.0 * std::numbers::sqrt2);
}

TEST(Cli, SearchExamples) {
  const std::vector<std::string> args{"--seed", "7",   "search",     "--functional", "minkowski_alt", "--p", "2",
                                      "--n",    "6",   "--restarts", "64"};
  const auto a = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  const auto ja = a.j();
  EXPECT_LE(ja["result"]["gap"].get<double>(), 0.02);
  EXPECT_FALSE(ja["result"]["violates_bound"].get<bool>());
  const auto b = run(args);
  EXPECT_EQ(strip_time(ja).dump(), strip_time(b.j()).dump());

  const auto one = run({"search", "--functional", "cauchy", "--n", "1", "--restarts", "4"});
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_NEAR(one.j()["result"]["best_value"].get<double>(), 1.0, 4 * std::numeric_limits<double>::epsilon());
}

TEST(Cli, Series) {
  const auto e = run({"series", "eta", "--s", "2"});
  ASSERT_EQ(e.code, 0);
  EXPECT_NEAR(e.j()["result"]["eta"]["value"].get<double>(), std::numbers::pi * std::numbers::pi / 12, 1e-12);

  const auto f = run({"series", "F_scan", "--p", "2", "--grid", "0.25:3:0.25"});
  ASSERT_EQ(f.code, 0);
  const auto fj = f.j()["result"];
  EXPECT_EQ(fj["violations"], 0);
  EXPECT_NEAR(fj["max_F"].get<double>(), 1.0, 2e-12);
  EXPECT_EQ(fj["argmax"]["alpha"], fj["argmax"]["beta"]);
  EXPECT_EQ(fj["points"], 144);

  const auto g = run({"series", "geometric", "--a", "2", "--b", "2", "--p", "2"});
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(g.j()["result"]["equality_locus"].size(), 1u);

  const auto h = run({"series", "harmonic", "--grid", "0.5,1", "--p", "2"});
  EXPECT_EQ(h.code, 0);
  EXPECT_EQ(h.j()["result"]["equality_locus"].size(), 2u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"constants"}).code, 2);
  EXPECT_EQ(run({"constants", "--box", "1,2,1,2", "--quotient", "1,3"}).code, 2);
  EXPECT_EQ(run({"verify", "--functional", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "--functional", "holder", "--p", "1"}).code, 2);
  EXPECT_EQ(run({"series", "eta", "--s", "0"}).code, 2);
  EXPECT_EQ(run({"series", "zeta", "--s", "1"}).code, 2);
  EXPECT_EQ(run({"sharpness", "holder_zero", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"sharpness", "minkowski_eps_b", "--grid", "10,1"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "series", "eta", "--s", "2"}).code, 2);
  EXPECT_EQ(run({"--format", "text", "series", "eta", "--s", "2"}).code, 2);
  EXPECT_EQ(run({"search", "--functional", "holder", "--p", "1"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"--version"}).code, 0);
  // a gap below the degeneracy floor
  EXPECT_EQ(run({"sharpness", "holder_blowup", "--grid", "1e-300"}).code, 3);
  EXPECT_EQ(run({"sharpness", "minkowski_eps_b", "--grid", "1e300"}).code, 1);
}

TEST(Cli, OutFileAndManifest) {
  const auto dir = std::filesystem::temp_directory_path() / "altineq_cli_test";
  std::filesystem::create_directories(dir);
  const auto csv = (dir / "trace.csv").string();
  const auto r = run({"--out", csv, "sharpness", "minkowski_eps_b"});
  ASSERT_EQ(r.code, 0);
  std::ifstream f(csv);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str().substr(0, ss.str().find('\n')), "param,ratio,bound,gap");
  const auto m = r.j()["manifest"];
  EXPECT_EQ(m["outputs"][0], csv);
  EXPECT_EQ(m["version"], cli::kVersion);
  EXPECT_TRUE(m.contains("timestamp"));
  EXPECT_EQ(m["parameters"]["tol"], kTolCmp);

  const auto js = (dir / "constants.json").string();
  ASSERT_EQ(run({"--out", js, "constants", "--quotient", "1,3"}).code, 0);
  std::ifstream g(js);
  const auto j = json::parse(g);
  EXPECT_EQ(j["result"]["C_mM"], 1.25);
  std::filesystem::remove_all(dir);
}

TEST(Cli, ReplayIsBitIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--seed", "5", "verify", "--functional", "all", "--trials", "300"},
           {"--seed", "5", "search", "--functional", "reverse_minkowski", "--n", "8", "--restarts", "8"},
           {"series", "F_scan", "--p", "3/2,2,3"},
           {"sharpness", "holder_blowup"}}) {
    const auto a = run(args);
    const auto b = run(args);
    ASSERT_EQ(a.code, b.code);
    EXPECT_EQ(strip_time(a.j()).dump(), strip_time(b.j()).dump());
  }
}

TEST(Cli, ThreadCapDoesNotChangeOutput) {
  const std::vector<std::string> args{"--seed", "9", "verify", "--functional", "minkowski_alt", "--trials", "4000"};
  ::setenv("ALTINEQ_THREADS", "1", 1);
  EXPECT_EQ(cli::worker_count(), 1u);
  const auto a = run(args);
  ::setenv("ALTINEQ_THREADS", "8", 1);
  const auto b = run(args);
  ::setenv("ALTINEQ_THREADS", "0", 1);
  EXPECT_EQ(run(args).code, 2);
  ::unsetenv("ALTINEQ_THREADS");
  EXPECT_EQ(strip_time(a.j()).dump(), strip_time(b.j()).dump());
}

TEST(Cli, Parsers) {
  EXPECT_EQ(cli::parse_grid("0.25:3:0.25").size(), 12u);
  EXPECT_EQ(cli::parse_grid("0.25:3:0.25").back(), 3.0);
  EXPECT_EQ(cli::parse_grid("1,2,5"), (std::vector<double>{1, 2, 5}));
  EXPECT_EQ(cli::parse_real("3/2"), 1.5);
  EXPECT_THROW(cli::parse_grid("1:2"), InvalidArgument);
  EXPECT_THROW(cli::parse_reals("1,2,3", 4), InvalidArgument);
  EXPECT_THROW(cli::parse_count("-1"), InvalidArgument);
}
