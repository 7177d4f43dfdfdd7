#pragma once

// JSON and CSV renderings of the library's records.

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "altineq/campaign.hpp"
#include "altineq/extremal.hpp"
#include "altineq/report.hpp"
#include "altineq/seqcore.hpp"
#include "altineq/series.hpp"

namespace altineq {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// %.17g rendering used for CSV cells.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline json to_json(const Seq& s) { return json(s.vec()); }
inline json to_json(const BoundedMonotoneSeq& s) { return json(s.seq().vec()); }

inline Seq seq_from_json(const json& j) {
  detail::require(j.is_array(), "sequence JSON must be an array of numbers");
  std::vector<double> v;
  for (const auto& e : j) {
    detail::require(e.is_number(), "sequence JSON must be an array of numbers");
    v.push_back(e.get<double>());
  }
  return Seq(std::move(v));
}

inline json to_json(const GenSpec& g) {
  return json{{"n", g.n},
              {"lo", g.lo},
              {"hi", g.hi},
              {"direction", to_string(g.direction)},
              {"seed", g.seed},
              {"distribution", to_string(g.distribution)}};
}

inline GenSpec genspec_from_json(const json& j) {
  detail::require(j.is_object(), "GenSpec JSON must be an object");
  GenSpec g;
  try {
    g.n = j.at("n").get<std::size_t>();
    g.lo = j.at("lo").get<double>();
    g.hi = j.at("hi").get<double>();
    g.seed = j.at("seed").get<std::uint64_t>();
    const auto dir = j.value("direction", std::string("non-increasing"));
    const auto dist = j.value("distribution", std::string("uniform-gaps"));
    detail::require(dir == "non-increasing" || dir == "non-decreasing", "GenSpec: unknown direction " + dir);
    detail::require(dist == "uniform-gaps" || dist == "geometric-decay", "GenSpec: unknown distribution " + dist);
    g.direction = dir == "non-increasing" ? Direction::non_increasing : Direction::non_decreasing;
    g.distribution = dist == "uniform-gaps" ? Distribution::uniform_gaps : Distribution::geometric_decay;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("GenSpec JSON: ") + e.what());
  }
  return g;
}

inline json to_json(const BoundsBox& b) {
  return json{{"a_lo", b.a_lo}, {"a_hi", b.a_hi}, {"b_lo", b.b_lo}, {"b_hi", b.b_hi}};
}

inline json to_json(const RatioReport& r) {
  json j{{"functional", r.functional}, {"n", r.n}};
  if (r.p) j["p"] = *r.p;
  if (r.q) j["q"] = *r.q;
  j["numerator"] = r.numerator;
  j["denominator"] = r.denominator;
  j["ratio"] = r.ratio;
  j["bound"] = r.bound;
  if (r.lower) j["lower"] = *r.lower;
  j["slack"] = r.slack;
  j["holds"] = r.holds;
  j["equality"] = r.equality;
  if (r.lower) j["lower_equality"] = r.lower_equality;
  if (r.box) j["box"] = to_json(*r.box);
  return j;
}

inline json to_json(const WitnessTrace& t) {
  json pts = json::array();
  for (const auto& pt : t.points) {
    pts.push_back({{"param", pt.param}, {"ratio", pt.ratio}, {"bound", pt.bound}, {"gap", pt.gap}});
  }
  return json{{"family", t.family}, {"parameter", t.parameter}, {"p", t.p}, {"points", std::move(pts)}};
}

inline void write_csv(std::ostream& os, const WitnessTrace& t) {
  os << "param,ratio,bound,gap\n";
  for (const auto& pt : t.points) {
    os << fmt17(pt.param) << ',' << fmt17(pt.ratio) << ',' << fmt17(pt.bound) << ',' << fmt17(pt.gap) << '\n';
  }
}

inline json to_json(const SearchConfig& c, const SearchResult& r) {
  json j{{"functional", to_string(c.functional)},
         {"p", c.p},
         {"n", c.n},
         {"direction", to_string(c.direction)},
         {"best_value", r.best_value},
         {"bound", r.bound},
         {"gap", r.gap},
         {"witness", {{"a", to_json(r.a)}, {"b", to_json(r.b)}}},
         {"restarts", c.restarts},
         {"evaluations", r.evaluations},
         {"seed", c.seed},
         {"restart_index", r.restart_index}};
  if (c.functional == Functional::power_ratio) {
    j["r"] = c.r;
    j["R"] = c.R;
  }
  return j;
}

inline json to_json(const SharpnessComparison& s) {
  return json{{"functional", s.functional},         {"family", s.family},
              {"p", s.p},                           {"search_best", s.search_best},
              {"constructive_best", s.constructive_best}, {"constructive_param", s.constructive_param},
              {"difference", s.difference},         {"underperforms", s.underperforms}};
}

inline json to_json(const EtaResult& e) {
  return json{{"s", e.s}, {"value", e.value}, {"est_error", e.est_error}, {"terms_used", e.terms_used}};
}

inline json to_json(const CampaignReport& r) {
  json j{{"functional", r.functional}, {"trials", r.trials},         {"holds", r.holds},
         {"equalities", r.equalities}, {"errors", r.errors},         {"violations", r.violations}};
  if (r.trials > r.errors) {
    j["worst_slack"] = r.worst_slack;
    j["worst_trial"] = r.worst_trial;
  } else {
    j["worst_slack"] = nullptr;
    j["worst_trial"] = nullptr;
  }
  if (r.offender) {
    j["offender"] = {{"trial", r.offender->trial},
                     {"report", to_json(r.offender->report)},
                     {"a", r.offender->a},
                     {"b", r.offender->b}};
  } else {
    j["offender"] = nullptr;
  }
  return j;
}

/// Summary {max_F, argmax, violations} plus the equality-curve statistics.
inline json summary_json(const FScan& f) {
  return json{{"max_F", f.max_F},
              {"argmax", {{"alpha", f.argmax_alpha}, {"beta", f.argmax_beta}, {"p", f.argmax_p}}},
              {"violations", f.violations},
              {"points", f.rows.size()},
              {"curve_points", f.curve_points},
              {"curve_max_deviation", f.curve_max_deviation}};
}

inline void write_csv(std::ostream& os, const FScan& f) {
  os << "alpha,beta,p,F,slack\n";
  for (const auto& r : f.rows) {
    os << fmt17(r.alpha) << ',' << fmt17(r.beta) << ',' << fmt17(r.p) << ',' << fmt17(r.F) << ',' << fmt17(r.slack)
       << '\n';
  }
}

}  // namespace altineq
