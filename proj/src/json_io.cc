// Copyright 2026 The Consensus Division Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "consensus/json_io.h"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace consensus {
namespace {

// nlohmann reports type errors with its own exception hierarchy; the CLI
// treats every malformed document alike.
template <typename F>
auto Guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

Rational RationalFromJson(const Json& j) {
  if (j.is_string()) return ParseRational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw std::invalid_argument("rational must be a \"p/q\" string or an integer");
}

std::size_t SizeField(const Json& j, const char* key) {
  if (!j.contains(key)) {
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  }
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw std::invalid_argument(std::string("field \"") + key +
                                "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

Instance InstanceFields(const Json& j) {
  std::size_t n = SizeField(j, "n");
  std::size_t m = SizeField(j, "m");
  RationalMatrix u = RationalMatrixFromJson(j.at("utilities"));
  bool allow_negative = j.value("allow_negative", false);
  return Instance(n, m, std::move(u), allow_negative);
}

}  // namespace

Json RationalVectorToJson(const RationalVector& v) {
  Json out = Json::array();
  for (const Rational& q : v) out.push_back(FormatRational(q));
  return out;
}

RationalVector RationalVectorFromJson(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array");
  RationalVector out;
  out.reserve(j.size());
  for (const Json& e : j) out.push_back(RationalFromJson(e));
  return out;
}

Json RationalMatrixToJson(const RationalMatrix& m) {
  Json out = Json::array();
  for (const RationalVector& row : m) out.push_back(RationalVectorToJson(row));
  return out;
}

RationalMatrix RationalMatrixFromJson(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rows");
  RationalMatrix out;
  out.reserve(j.size());
  for (const Json& row : j) out.push_back(RationalVectorFromJson(row));
  return out;
}

Json InstanceToJson(const Instance& instance) {
  return Json{{"n", instance.num_agents()},
              {"m", instance.num_items()},
              {"utilities", RationalMatrixToJson(instance.utilities())},
              {"allow_negative", instance.allow_negative()}};
}

Instance InstanceFromJson(const Json& j) {
  return Guarded("instance", [&] {
    if (!j.is_object()) throw std::invalid_argument("instance must be an object");
    return InstanceFields(j);
  });
}

Json SplitToJson(const FractionalSplit& split) {
  return Json{{"k", split.num_parts()},
              {"fractions", RationalMatrixToJson(split.fractions())}};
}

FractionalSplit SplitFromJson(const Json& j) {
  return Guarded("split", [&] {
    if (!j.is_object()) throw std::invalid_argument("split must be an object");
    return FractionalSplit(SizeField(j, "k"),
                           RationalMatrixFromJson(j.at("fractions")));
  });
}

Ratios ParseRatios(std::string_view text) {
  RationalVector alphas;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    alphas.push_back(ParseRational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Ratios(std::move(alphas));
}

Json RatiosToJson(const Ratios& ratios) {
  return RationalVectorToJson(ratios.values());
}

Json OracleSpecToJson(const OracleSpec& spec) {
  struct Visitor {
    Json operator()(const Instance& inst) const {
      Json out = InstanceToJson(inst);
      out["kind"] = "additive";
      return out;
    }
    Json operator()(const SymmetricThresholdUtility& u) const {
      Json out = InstanceToJson(u.base);
      out["kind"] = "symmetric-threshold";
      out["caps"] = RationalMatrixToJson(u.caps);
      return out;
    }
    Json operator()(const CoverageUtility& u) const {
      Json agents = Json::array();
      for (const CoverageAgent& a : u.agents) {
        agents.push_back(
            Json{{"weights", RationalVectorToJson(a.weights)}, {"covers", a.covers}});
      }
      return Json{{"kind", "coverage"},
                  {"n", u.agents.size()},
                  {"m", u.num_items},
                  {"agents", agents}};
    }
    Json operator()(const TableUtility& u) const {
      return Json{{"kind", "table"},
                  {"n", u.values.size()},
                  {"m", u.num_items},
                  {"values", RationalMatrixToJson(u.values)}};
    }
  };
  return std::visit(Visitor{}, spec);
}

OracleSpec OracleSpecFromJson(const Json& j) {
  return Guarded("oracle spec", [&]() -> OracleSpec {
    if (!j.is_object()) throw std::invalid_argument("oracle spec must be an object");
    std::string kind = j.value("kind", std::string("additive"));
    if (kind == "additive") return InstanceFields(j);
    if (kind == "symmetric-threshold") {
      return SymmetricThresholdUtility(InstanceFields(j),
                                       RationalMatrixFromJson(j.at("caps")));
    }
    if (kind == "coverage") {
      CoverageUtility u;
      u.num_items = SizeField(j, "m");
      for (const Json& a : j.at("agents")) {
        CoverageAgent agent;
        agent.weights = RationalVectorFromJson(a.at("weights"));
        agent.covers = a.at("covers").get<std::vector<std::vector<std::size_t>>>();
        u.agents.push_back(std::move(agent));
      }
      return u;
    }
    if (kind == "table") {
      TableUtility u;
      u.num_items = SizeField(j, "m");
      u.values = RationalMatrixFromJson(j.at("values"));
      return u;
    }
    throw std::invalid_argument("unknown oracle kind \"" + kind + "\"");
  });
}

Json ItemSetToJson(const ItemSet& set) { return Json(Members(set)); }

ItemSet ItemSetFromJson(const Json& j, std::size_t num_items) {
  return Guarded("item set", [&] {
    if (!j.is_array()) throw std::invalid_argument("item set must be an array");
    std::vector<std::size_t> items = j.get<std::vector<std::size_t>>();
    for (std::size_t item : items) {
      if (item >= num_items) throw std::invalid_argument("item index out of range");
    }
    return MakeItemSet(num_items, items);
  });
}

Json SplitReportToJson(const SplitReport& report) {
  return Json{{"pass", report.pass},
              {"cut_items", report.cut_items},
              {"cut_count", report.cut_count},
              {"residuals", RationalMatrixToJson(report.residuals)}};
}

Json RandomMinCutsReportToJson(const RandomMinCutsReport& report) {
  const RandomMinCutsParams& p = report.params;
  Json histogram = Json::object();
  for (const auto& [cuts, count] : report.histogram) {
    histogram[std::to_string(cuts)] = count;
  }
  double fraction = p.trials == 0 ? 0.0
                                  : static_cast<double>(report.at_bound) /
                                        static_cast<double>(p.trials);
  return Json{{"experiment", "thm4"},
              {"params",
               {{"trials", p.trials},
                {"n", p.n},
                {"m", p.m},
                {"seed", p.seed},
                {"denom", p.denom}}},
              {"bound", std::min(p.n, p.m)},
              {"min_cuts", report.min_cuts},
              {"histogram", histogram},
              {"at_bound", report.at_bound},
              {"fraction_at_bound", fraction}};
}

Json GreedySuccessReportToJson(const GreedySuccessReport& report) {
  const GreedySuccessParams& p = report.params;
  double rate = p.trials == 0 ? 0.0
                              : static_cast<double>(report.successes) /
                                    static_cast<double>(p.trials);
  std::vector<int> success(report.success.begin(), report.success.end());
  return Json{{"experiment", "thm10"},
              {"params",
               {{"trials", p.trials},
                {"m", p.m},
                {"k", p.k},
                {"seed", p.seed},
                {"denom", p.denom}}},
              {"success", success},
              {"successes", report.successes},
              {"success_rate", rate}};
}

}  // namespace consensus
