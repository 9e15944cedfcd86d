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


// consensus: batch front end over the JSON formats.
//
//   consensus generate random --n 3 --m 10 --seed 1 --out inst.json
//   consensus solve halving --instance inst.json
//   consensus stats thm4 --trials 100 --n 3 --m 5 --pretty
//
// Exit codes: 0 ok, 1 verification failed, 2 bad input, 3 size guard,
// 4 internal failure of a guaranteed procedure.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "consensus/additive.h"
#include "consensus/agreeable.h"
#include "consensus/generators.h"
#include "consensus/json_io.h"
#include "consensus/monotonic.h"
#include "consensus/oracles.h"
#include "consensus/stats.h"
#include "consensus/types.h"

namespace consensus {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitGuard = 3;
constexpr int kExitTheorem = 4;

struct Options {
  // generate / stats
  std::size_t n = 2;
  std::size_t m = 4;
  std::size_t k = 2;
  std::size_t trials = 0;
  std::size_t universe = 6;
  std::uint64_t seed = 0;
  std::uint64_t denom = 1000000;
  std::string weights;
  int threads = 0;
  bool pretty = false;
  // solve / verify / oracle
  std::string ratios;
  std::string instance_path;
  std::string split_path;
  std::string set;
  std::string out_path;
};

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void Emit(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(opt.out_path);
  if (!out) throw std::invalid_argument("cannot write " + opt.out_path);
  out << text << '\n';
}

void EmitJson(const Options& opt, const Json& doc) { Emit(opt, doc.dump(2)); }

std::vector<std::int64_t> ParseWeights(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    std::size_t used = 0;
    long long w = 0;
    try {
      w = std::stoll(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != piece.size() || w <= 0) {
      throw std::invalid_argument("weights must be positive integers: " + text);
    }
    out.push_back(w);
  }
  if (out.empty()) throw std::invalid_argument("no weights given");
  return out;
}

Ratios RatiosOr(const Options& opt, const Ratios& fallback) {
  return opt.ratios.empty() ? fallback : ParseRatios(opt.ratios);
}

// ---------------------------------------------------------------- generate

int Generate(const std::string& kind, const Options& opt) {
  Json doc;
  Json meta = {{"generator", kind}};
  if (kind == "random") {
    if (opt.denom < 2) throw std::invalid_argument("--denom must be >= 2");
    doc = InstanceToJson(GenRandom(opt.n, opt.m, opt.seed, opt.denom));
    meta["seed"] = opt.seed;
    meta["denom"] = opt.denom;
    meta["expected_min_cuts"] = std::min(opt.n, opt.m);
  } else if (kind == "partition") {
    std::vector<std::int64_t> w = ParseWeights(opt.weights);
    PartitionReduction r = GenPartitionReduction(opt.n, w);
    doc = InstanceToJson(r.instance);
    meta["weights"] = w;
    meta["block_size"] = r.num_weights;
    if (r.bipartition_exists) {
      meta["bipartition_exists"] = *r.bipartition_exists;
      meta["expected_min_cuts"] = *r.bipartition_exists ? 0 : opt.n;
    }
  } else if (kind == "ksplit") {
    Ratios ratios = RatiosOr(opt, Ratios::Uniform(opt.k));
    KSplitWorstCase w = GenKSplitWorstCase(opt.n, ratios);
    doc = InstanceToJson(w.instance);
    meta["ratios"] = RatiosToJson(ratios);
    meta["block_size"] = w.block_size;
    meta["expected_min_cut_items"] = (ratios.size() - 1) * opt.n;
  } else if (kind == "line") {
    LineLowerBound l = GenLineLowerBound(opt.n);
    doc = InstanceToJson(l.instance);
    meta["order"] = l.order;
    std::vector<int> primary(l.is_primary.begin(), l.is_primary.end());
    meta["is_primary"] = primary;
    meta["ratios"] = RatiosToJson(l.ratios);
    meta["expected_min_line_cuts"] = 2 * opt.n - 4;
  } else if (kind == "tight") {
    doc = InstanceToJson(GenAgreeableTight(opt.n, opt.m));
    meta["expected_min_agreeable_size"] = (opt.m + opt.n) / 2;
  } else if (kind == "coverage") {
    doc = OracleSpecToJson(GenRandomCoverage(opt.n, opt.m, opt.universe, opt.seed));
    meta["seed"] = opt.seed;
    meta["universe"] = opt.universe;
  } else if (kind == "threshold") {
    if (opt.denom < 2) throw std::invalid_argument("--denom must be >= 2");
    doc = OracleSpecToJson(
        GenRandomSymmetricThreshold(opt.n, opt.m, opt.seed, opt.denom));
    meta["seed"] = opt.seed;
    meta["denom"] = opt.denom;
  } else {
    throw std::invalid_argument("unknown generator " + kind);
  }
  doc["metadata"] = meta;
  EmitJson(opt, doc);
  return kExitOk;
}

// ------------------------------------------------------------------- solve

Json SplitOutput(const std::string& kind, const Instance& inst,
                 const FractionalSplit& split, const Ratios& ratios,
                 bool* pass) {
  SplitReport report = VerifySplit(inst, split, ratios);
  *pass = report.pass;
  return Json{{"kind", kind},
              {"ratios", RatiosToJson(ratios)},
              {"split", SplitToJson(split)},
              {"verification", SplitReportToJson(report)}};
}

Json DiscreteToJson(const DiscreteHalving& h) {
  return Json{{"m0", ItemSetToJson(h.m0)},
              {"m1", ItemSetToJson(h.m1)},
              {"m2", ItemSetToJson(h.m2)}};
}

int Solve(const std::string& kind, const Options& opt) {
  Json out;
  bool pass = false;
  if (kind == "table1") {
    Table1Solution s = SolveTable1Instance();
    pass = s.quadratic_residual <= 1e-9 && s.halving_residuals[0] <= 1e-9 &&
           s.halving_residuals[1] <= 1e-9;
    char approx[64];
    std::snprintf(approx, sizeof approx, "%.12f", s.x_approx);
    out = {{"kind", kind},
           {"x", FormatRational(s.x)},
           {"x_decimal", approx},
           {"verification",
            {{"pass", pass},
             {"quadratic_residual", s.quadratic_residual},
             {"agent1_equation", s.agent1_equation},
             {"halving_residuals", s.halving_residuals}}}};
    EmitJson(opt, out);
    return pass ? kExitOk : kExitVerifyFailed;
  }

  if (opt.instance_path.empty()) {
    throw std::invalid_argument("--instance is required");
  }
  Json doc = ReadJsonFile(opt.instance_path);
  OracleSpec spec = OracleSpecFromJson(doc);
  const Instance* additive = std::get_if<Instance>(&spec);
  auto need_additive = [&]() -> const Instance& {
    if (additive == nullptr) {
      throw std::invalid_argument(kind + " needs an additive instance");
    }
    return *additive;
  };

  if (kind == "halving") {
    const Instance& inst = need_additive();
    TwoSplitResult r = SolveHalving(inst);
    out = SplitOutput(kind, inst, r.split, Ratios::Halving(), &pass);
    Json pinned = Json::array();
    for (const auto& [item, value] : r.trace.pinned) {
      pinned.push_back({{"item", item}, {"value", FormatRational(value)}});
    }
    out["trace"] = {{"iterations", r.trace.iterations.size()},
                    {"pinned", pinned}};
    pass = pass && r.split.num_items() == inst.num_items() &&
           CutCount(r.split) <= std::min(inst.num_agents(), inst.num_items());
  } else if (kind == "ksplit") {
    const Instance& inst = need_additive();
    if (opt.ratios.empty()) throw std::invalid_argument("--ratios is required");
    Ratios ratios = ParseRatios(opt.ratios);
    FractionalSplit split = ratios.size() == 2
                                ? SolveTwoSplitting(inst, ratios).split
                                : SolveKSplitting(inst, ratios);
    out = SplitOutput(kind, inst, split, ratios, &pass);
    std::size_t bound = (ratios.size() - 1) *
                        std::min(inst.num_agents(), inst.num_items());
    out["cut_bound"] = bound;
    pass = pass && CutCount(split) <= bound;
  } else if (kind == "greedy-one-cut") {
    const Instance& inst = need_additive();
    if (inst.num_agents() != 1) {
      throw std::invalid_argument("greedy-one-cut needs a single agent");
    }
    Ratios ratios = RatiosOr(opt, Ratios::Halving());
    GreedyOutcome g = GreedyOneCut(inst.row(0), ratios);
    if (std::holds_alternative<ConditionFailed>(g)) {
      out = {{"kind", kind}, {"condition_failed", true}};
      EmitJson(opt, out);
      return kExitVerifyFailed;
    }
    const FractionalSplit& split = std::get<FractionalSplit>(g);
    out = SplitOutput(kind, inst, split, ratios, &pass);
    pass = pass && CutItems(split).size() <= 1;
  } else if (kind == "discrete") {
    UtilityOracle f = MakeOracle(spec);
    DiscreteHalving h = SolveDiscreteHalving(f);
    bool ok = IsDiscreteHalving(f, h);
    std::size_t bound = std::min(f.num_agents(), f.num_items());
    std::size_t size = Members(h.m0).size();
    pass = ok && size <= bound;
    out = {{"kind", kind},
           {"halving", DiscreteToJson(h)},
           {"verification",
            {{"pass", pass}, {"discrete_halving", ok}, {"m0_size", size},
             {"m0_bound", bound}}}};
  } else if (kind == "austin") {
    UtilityOracle f = MakeOracle(spec);
    if (f.num_agents() != 2) {
      throw std::invalid_argument("austin needs exactly two agents");
    }
    Exact1Result r = AustinExact1(f);
    bool exact1 = CheckExact1(f, r.part1, r.part2);
    DiscreteHalving h = Exact1ToDiscrete(f, r.part1, r.part2);
    bool discrete = IsDiscreteHalving(f, h);
    pass = exact1 && discrete;
    out = {{"kind", kind},
           {"part1", ItemSetToJson(r.part1)},
           {"part2", ItemSetToJson(r.part2)},
           {"knives", {r.state.knife1, r.state.knife2}},
           {"knife_moves", r.knife_moves},
           {"oracle_calls", r.oracle_calls},
           {"discrete", DiscreteToJson(h)},
           {"verification",
            {{"pass", pass}, {"exact1", exact1}, {"discrete_halving", discrete}}}};
  } else if (kind == "lovasz") {
    UtilityOracle f = MakeOracle(spec);
    FractionalSplit split = SolveLovaszHalving(f);
    RationalVector x1 = split.Column(0), x2 = split.Column(1);
    Json residuals = Json::array();
    bool equal = true;
    for (std::size_t i = 0; i < f.num_agents(); ++i) {
      Rational d = LovaszExtension(f, i, x1) - LovaszExtension(f, i, x2);
      equal = equal && IsZero(d);
      residuals.push_back(FormatRational(d));
    }
    std::size_t bound = std::min(f.num_agents(), f.num_items());
    pass = equal && CutCount(split) <= bound;
    out = {{"kind", kind},
           {"split", SplitToJson(split)},
           {"verification",
            {{"pass", pass},
             {"residuals", residuals},
             {"cut_count", CutCount(split)},
             {"cut_bound", bound}}}};
  } else if (kind == "agreeable") {
    AgreeableResult r;
    bool agreeable = false;
    if (additive != nullptr) {
      r = AgreeableAdditive(*additive);
      agreeable = CheckAgreeable(*additive, r.set);
    } else {
      UtilityOracle f = MakeOracle(spec);
      r = AgreeableMonotonic(f);
      agreeable = CheckAgreeable(f, r.set);
    }
    std::size_t size = Members(r.set).size();
    pass = agreeable && size <= r.size_bound;
    out = {{"kind", kind},
           {"set", ItemSetToJson(r.set)},
           {"line_order", r.line_order},
           {"blocks", r.blocks},
           {"verification",
            {{"pass", pass},
             {"agreeable", agreeable},
             {"size", size},
             {"size_bound", r.size_bound}}}};
  } else {
    throw std::invalid_argument("unknown solver " + kind);
  }
  EmitJson(opt, out);
  return pass ? kExitOk : kExitVerifyFailed;
}

// ------------------------------------------------------------------ verify

int Verify(const Options& opt) {
  if (opt.instance_path.empty()) {
    throw std::invalid_argument("--instance is required");
  }
  OracleSpec spec = OracleSpecFromJson(ReadJsonFile(opt.instance_path));
  Json out;
  bool pass = false;
  if (!opt.set.empty()) {
    UtilityOracle f = MakeOracle(spec);
    Json items = Json::array();
    std::stringstream ss(opt.set);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      try {
        items.push_back(std::stoul(piece));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad item index " + piece);
      }
    }
    ItemSet set = ItemSetFromJson(items, f.num_items());
    pass = CheckAgreeable(f, set);
    out = {{"agreeable", pass}, {"set", ItemSetToJson(set)}};
  } else if (!opt.split_path.empty()) {
    const Instance* inst = std::get_if<Instance>(&spec);
    if (inst == nullptr) {
      throw std::invalid_argument("split verification needs an additive instance");
    }
    Json doc = ReadJsonFile(opt.split_path);
    // Accept either a bare split or the output of `solve`.
    if (doc.contains("split")) doc = doc.at("split");
    FractionalSplit split = SplitFromJson(doc);
    Ratios ratios = RatiosOr(opt, Ratios::Uniform(split.num_parts()));
    SplitReport report = VerifySplit(*inst, split, ratios);
    pass = report.pass;
    out = SplitReportToJson(report);
  } else {
    throw std::invalid_argument("give --split or --set");
  }
  EmitJson(opt, out);
  return pass ? kExitOk : kExitVerifyFailed;
}

// ------------------------------------------------------------------ oracle

int Oracle(const std::string& kind, const Options& opt) {
  if (opt.instance_path.empty()) {
    throw std::invalid_argument("--instance is required");
  }
  Json doc = ReadJsonFile(opt.instance_path);
  Json out = {{"oracle", kind}};
  if (kind == "agreeable") {
    UtilityOracle f = MakeOracle(OracleSpecFromJson(doc));
    out["min_size"] = MinAgreeableSizeOracle(f);
    EmitJson(opt, out);
    return kExitOk;
  }
  Instance inst = InstanceFromJson(doc);
  const Json* meta = doc.contains("metadata") ? &doc.at("metadata") : nullptr;
  if (kind == "min-cuts") {
    Ratios ratios = RatiosOr(opt, Ratios::Halving());
    MinCutsResult r = MinCutItemsOracle(inst, ratios);
    out["ratios"] = RatiosToJson(ratios);
    out["min_cut_items"] = r.min_cut_items;
    out["witness"] = SplitToJson(r.witness);
  } else if (kind == "line") {
    Ratios ratios = Ratios::Halving();
    std::vector<std::size_t> order(inst.num_items());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    if (meta != nullptr && meta->contains("order")) {
      order = meta->at("order").get<std::vector<std::size_t>>();
    }
    if (!opt.ratios.empty()) {
      ratios = ParseRatios(opt.ratios);
    } else if (meta != nullptr && meta->contains("ratios")) {
      ratios = Ratios(RationalVectorFromJson(meta->at("ratios")));
    }
    LineMinCutsResult r = MinCutsLineOracle(inst, order, ratios);
    out["ratios"] = RatiosToJson(ratios);
    out["order"] = order;
    out["min_cuts"] = r.min_cuts;
    out["first_part"] = RationalVectorToJson(r.first_part);
  } else {
    throw std::invalid_argument("unknown oracle " + kind);
  }
  EmitJson(opt, out);
  return kExitOk;
}

// ------------------------------------------------------------------- stats

std::string PrettyMinCuts(const RandomMinCutsReport& r) {
  std::ostringstream os;
  os << "random min cuts: trials=" << r.params.trials << " n=" << r.params.n
     << " m=" << r.params.m << " seed=" << r.params.seed
     << " denom=" << r.params.denom << '\n';
  os << "  cuts  trials\n";
  for (const auto& [cuts, count] : r.histogram) {
    char line[64];
    std::snprintf(line, sizeof line, "  %4zu  %6zu\n", cuts, count);
    os << line;
  }
  os << "at min(n,m) = " << std::min(r.params.n, r.params.m) << ": "
     << r.at_bound << "/" << r.params.trials;
  return os.str();
}

std::string PrettyGreedy(const GreedySuccessReport& r) {
  std::ostringstream os;
  os << "greedy one cut: trials=" << r.params.trials << " m=" << r.params.m
     << " k=" << r.params.k << " seed=" << r.params.seed
     << " denom=" << r.params.denom << '\n';
  os << "successes: " << r.successes << "/" << r.params.trials;
  return os.str();
}

int Stats(const std::string& kind, const Options& opt) {
  int threads = opt.threads > 0 ? opt.threads : DefaultThreadCount();
  if (kind == "thm4") {
    RandomMinCutsParams p{opt.trials, opt.n, opt.m, opt.seed, opt.denom};
    RandomMinCutsReport r = RunRandomMinCuts(p, threads);
    if (opt.pretty) {
      Emit(opt, PrettyMinCuts(r));
    } else {
      EmitJson(opt, RandomMinCutsReportToJson(r));
    }
  } else if (kind == "thm10") {
    GreedySuccessParams p{opt.trials, opt.m, opt.k, opt.seed, opt.denom};
    GreedySuccessReport r = RunGreedySuccess(p, threads);
    if (opt.pretty) {
      Emit(opt, PrettyGreedy(r));
    } else {
      EmitJson(opt, GreedySuccessReportToJson(r));
    }
  } else {
    throw std::invalid_argument("unknown experiment " + kind);
  }
  return kExitOk;
}

int Run(int argc, char** argv) {
  CLI::App app{"Consensus halving and splitting toolkit"};
  app.require_subcommand(1);
  Options opt;
  std::string kind;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out,-o", opt.out_path, "Output file (default stdout)");
  };

  CLI::App* gen = app.add_subcommand("generate", "Write a generated instance");
  gen->add_option("kind", kind, "random|partition|ksplit|line|tight|coverage|threshold")
      ->required()
      ->check(CLI::IsMember({"random", "partition", "ksplit", "line", "tight",
                             "coverage", "threshold"}));
  gen->add_option("--n", opt.n, "Agents");
  gen->add_option("--m", opt.m, "Items");
  gen->add_option("--k", opt.k, "Parts (ksplit, uniform ratios)");
  gen->add_option("--seed", opt.seed, "Random seed");
  gen->add_option("--denom", opt.denom, "Denominator bound");
  gen->add_option("--weights", opt.weights, "Comma separated integers");
  gen->add_option("--ratios", opt.ratios, "e.g. 1/3,1/3,1/3");
  gen->add_option("--universe", opt.universe, "Coverage universe size");
  add_out(gen);

  CLI::App* solve = app.add_subcommand("solve", "Run a solver and verify it");
  solve->add_option("kind", kind,
                    "halving|ksplit|greedy-one-cut|discrete|austin|lovasz|"
                    "agreeable|table1")
      ->required()
      ->check(CLI::IsMember({"halving", "ksplit", "greedy-one-cut", "discrete",
                             "austin", "lovasz", "agreeable", "table1"}));
  solve->add_option("--instance,-i", opt.instance_path, "Instance or oracle spec");
  solve->add_option("--ratios", opt.ratios, "e.g. 1/3,1/3,1/3");
  add_out(solve);

  CLI::App* verify = app.add_subcommand("verify", "Check a split or a set");
  verify->add_option("--instance,-i", opt.instance_path, "Instance")->required();
  verify->add_option("--split", opt.split_path, "Split JSON or solve output");
  verify->add_option("--set", opt.set, "Comma separated items (agreeable)");
  verify->add_option("--ratios", opt.ratios, "Default: uniform");
  add_out(verify);

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force optimum");
  oracle->add_option("kind", kind, "min-cuts|line|agreeable")
      ->required()
      ->check(CLI::IsMember({"min-cuts", "line", "agreeable"}));
  oracle->add_option("--instance,-i", opt.instance_path, "Instance")->required();
  oracle->add_option("--ratios", opt.ratios, "Default: 1/2,1/2");
  add_out(oracle);

  CLI::App* stats = app.add_subcommand("stats", "Seeded statistical experiments");
  stats->add_option("experiment", kind, "thm4|thm10")
      ->required()
      ->check(CLI::IsMember({"thm4", "thm10"}));
  stats->add_option("--trials", opt.trials, "Trials");
  stats->add_option("--n", opt.n, "Agents (thm4)");
  stats->add_option("--m", opt.m, "Items");
  stats->add_option("--k", opt.k, "Parts (thm10)");
  stats->add_option("--seed", opt.seed, "Base seed; trial t uses seed + t");
  stats->add_option("--denom", opt.denom, "Denominator bound");
  stats->add_option("--threads", opt.threads,
                    "Worker threads (default CONSENSUS_THREADS or all)");
  stats->add_flag("--pretty", opt.pretty, "Human readable table");
  add_out(stats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (gen->parsed()) return Generate(kind, opt);
    if (solve->parsed()) return Solve(kind, opt);
    if (verify->parsed()) return Verify(opt);
    if (oracle->parsed()) return Oracle(kind, opt);
    return Stats(kind, opt);
  } catch (const GuardError& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return kExitGuard;
  } catch (const TheoremViolation& e) {
    std::cerr << "internal: " << e.what() << '\n';
    return kExitTheorem;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
}

}  // namespace
}  // namespace consensus

int main(int argc, char** argv) { return consensus::Run(argc, argv); }
