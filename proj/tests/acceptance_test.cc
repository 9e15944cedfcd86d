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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "consensus/additive.h"
#include "consensus/agreeable.h"
#include "consensus/generators.h"
#include "consensus/monotonic.h"
#include "consensus/oracles.h"
#include "consensus/stats.h"
#include "consensus/types.h"

namespace consensus {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome Fail(std::string detail) { return {false, std::move(detail)}; }

std::string Fmt(const char* format, double a = 0, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

// 500 random instances: exact halvings with at most min(n, m) cuts, < 5 s.
Outcome Criterion1() {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<std::size_t> nd(1, 10), md(0, 100);
  Clock::time_point start = Clock::now();
  for (int t = 0; t < 500; ++t) {
    std::size_t n = nd(rng), m = md(rng);
    Instance inst = GenRandom(n, m, rng(), 1000000);
    TwoSplitResult r = SolveHalving(inst);
    SplitReport rep = VerifySplit(inst, r.split, Ratios::Halving());
    if (!rep.pass) return Fail("nonzero residual on trial " + std::to_string(t));
    if (rep.cut_items.size() > std::min(n, m)) {
      return Fail("too many cuts on trial " + std::to_string(t));
    }
  }
  double s = Seconds(start);
  return {s < 5.0, Fmt("500 instances exact, cuts <= min(n,m), %.2f s (limit 5 s)", s)};
}

// 100 trials at n=3, m=5: at least 99 need exactly 3 cuts, < 60 s.
Outcome Criterion2() {
  Clock::time_point start = Clock::now();
  RandomMinCutsReport r =
      RunRandomMinCuts({100, 3, 5, 4242, 1000000}, DefaultThreadCount());
  double s = Seconds(start);
  std::size_t exactly3 = std::count(r.min_cuts.begin(), r.min_cuts.end(), 3u);
  return {exactly3 >= 99 && s < 60.0,
          Fmt("%.0f/100 trials with minimum 3 cuts, %.2f s (limit 60 s)",
              static_cast<double>(exactly3), s)};
}

// Independent subset-sum check by bitmask.
bool EqualSumSplit(const std::vector<std::int64_t>& w) {
  std::int64_t total = 0;
  for (std::int64_t v : w) total += v;
  if (total % 2) return false;
  for (std::uint32_t mask = 0; mask < (1u << w.size()); ++mask) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if ((mask >> j) & 1u) s += w[j];
    }
    if (2 * s == total) return true;
  }
  return false;
}

// Every weight list of length <= 4 with entries in 1..8, two agents: the
// minimum is 0 or 2, and 0 exactly when an equal-sum bipartition exists.
Outcome Criterion3() {
  std::size_t lists = 0;
  for (std::size_t r = 1; r <= 4; ++r) {
    std::vector<std::int64_t> w(r, 1);
    while (true) {
      ++lists;
      std::size_t cuts = MinCutsOracle(GenPartitionReduction(2, w).instance).min_cut_items;
      bool split = EqualSumSplit(w);
      if (!(cuts == 0 || cuts == 2) || (cuts == 0) != split) {
        std::string text;
        for (std::int64_t v : w) text += std::to_string(v) + " ";
        return Fail("weights " + text + "gave " + std::to_string(cuts) + " cuts");
      }
      std::size_t pos = 0;
      while (pos < r && w[pos] == 8) w[pos++] = 1;
      if (pos == r) break;
      ++w[pos];
    }
  }
  return {true, Fmt("%.0f weight lists, minimum in {0,2} matching subset sum",
                    static_cast<double>(lists))};
}

// The worst-case family needs (k-1) n cut items and the solver achieves it.
Outcome Criterion4() {
  std::string detail;
  for (auto [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{
           {1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
    Ratios ratios = Ratios::Uniform(k);
    KSplitWorstCase w = GenKSplitWorstCase(n, ratios);
    FractionalSplit split = SolveKSplitting(w.instance, ratios);
    std::size_t bound = (k - 1) * n;
    std::size_t cuts = CutCount(split);
    std::size_t optimum = MinCutItemsOracle(w.instance, ratios).min_cut_items;
    if (!VerifySplit(w.instance, split, ratios).pass || cuts > bound ||
        optimum < bound) {
      return Fail(Fmt("(n,k)=(%.0f,%.0f) failed, solver %.0f cuts", n, k, cuts) +
                  ", oracle " + std::to_string(optimum));
    }
    detail += "(" + std::to_string(n) + "," + std::to_string(k) + "):" +
              std::to_string(cuts) + "=" + std::to_string(optimum) + " ";
  }
  return {true, "solver cuts = oracle minimum = (k-1)n: " + detail};
}

// Greedy one-cut succeeds in at least 99 of 100 trials at m=1000, k=4, < 30 s.
Outcome Criterion5() {
  Clock::time_point start = Clock::now();
  GreedySuccessReport r =
      RunGreedySuccess({100, 1000, 4, 777, 1000000}, DefaultThreadCount());
  double s = Seconds(start);
  return {r.successes >= 99 && s < 30.0,
          Fmt("%.0f/100 successes, %.2f s (limit 30 s)",
              static_cast<double>(r.successes), s)};
}

Outcome Criterion6() {
  Table1Solution t = SolveTable1Instance();
  double x = t.x_approx;
  double quad = std::abs(4 * x * x + 29 * x - 13);
  bool ok = quad <= 1e-9 && x >= 0.4234 && x <= 0.4236 &&
            t.halving_residuals[0] <= 1e-9 && t.halving_residuals[1] <= 1e-9;
  return {ok, Fmt("x2=%.12f, |4x^2+29x-13|=%.1e, max halving residual=%.1e", x, quad,
                  std::max(t.halving_residuals[0], t.halving_residuals[1]))};
}

Outcome Criterion7() {
  LineLowerBound l = GenLineLowerBound(3);
  std::size_t line = MinCutsLineOracle(l.instance, l.order, l.ratios).min_cuts;
  TwoSplitResult r = SolveTwoSplitting(l.instance, l.ratios);
  std::size_t unordered = CutCount(r.split);
  bool exact = VerifySplit(l.instance, r.split, l.ratios).pass;
  return {line >= 2 && unordered <= 3 && exact,
          Fmt("line minimum %.0f (need >= 2), unordered solver %.0f cuts (need <= 3)",
              static_cast<double>(line), static_cast<double>(unordered))};
}

// Additive, symmetric-threshold or coverage oracle depending on `kind`.
OracleSpec MixedSpec(int kind, std::size_t n, std::size_t m, std::uint64_t seed) {
  if (kind == 0) return GenRandom(n, m, seed, 1000);
  if (kind == 1) return GenRandomSymmetricThreshold(n, m, seed, 1000);
  return GenRandomCoverage(n, m, 8, seed);
}

// Independent discrete-halving check.
bool DiscreteOk(const UtilityOracle& f, const DiscreteHalving& h) {
  const std::size_t m = f.num_items();
  ItemSet a(m), b(m);
  for (std::size_t j = 0; j < m; ++j) {
    if (h.m0[j] + h.m1[j] + h.m2[j] != 1) return false;
    a[j] = h.m0[j] || h.m1[j];
    b[j] = h.m0[j] || h.m2[j];
  }
  for (std::size_t i = 0; i < f.num_agents(); ++i) {
    if (f.Value(i, a) < f.Value(i, h.m2) || f.Value(i, b) < f.Value(i, h.m1)) {
      return false;
    }
  }
  return true;
}

Outcome Criterion8() {
  std::mt19937_64 rng(8080);
  std::uniform_int_distribution<std::size_t> md(1, 10);
  double worst_ratio = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t m = md(rng);
    UtilityOracle f = MakeOracle(MixedSpec(t % 3, 2, m, rng()));
    Exact1Result r = AustinExact1(f);
    std::uint64_t calls = r.oracle_calls[0] + r.oracle_calls[1];
    worst_ratio = std::max(worst_ratio, static_cast<double>(calls) / m);
    if (!CheckExact1(f, r.part1, r.part2) || calls > 40 * m) {
      return Fail("trial " + std::to_string(t) + " not Exact1 or too many calls");
    }
    f.ResetCalls();
    if (!DiscreteOk(f, Exact1ToDiscrete(f, r.part1, r.part2))) {
      return Fail("trial " + std::to_string(t) + " rounding not a discrete halving");
    }
  }
  return {true, Fmt("200 oracles Exact1, max calls/m = %.2f (limit 40), roundings valid",
                    worst_ratio)};
}

Outcome Criterion9() {
  std::mt19937_64 rng(9090);
  for (int t = 0; t < 200; ++t) {
    if (t % 2 == 0) {
      std::size_t n = 1 + rng() % 6, m = rng() % 21;
      Instance inst = GenRandom(n, m, rng(), 1000000);
      AgreeableResult r = AgreeableAdditive(inst);
      if (Members(r.set).size() > std::min((m + n) / 2, m) ||
          !CheckAgreeable(inst, r.set)) {
        return Fail("additive trial " + std::to_string(t));
      }
    } else {
      std::size_t n = 1 + rng() % 3, m = 1 + rng() % 10;
      UtilityOracle f = MakeOracle(MixedSpec(t % 4 == 1 ? 2 : 1, n, m, rng()));
      AgreeableResult r = AgreeableMonotonic(f);
      if (Members(r.set).size() > std::min((m + n) / 2, m) || !CheckAgreeable(f, r.set)) {
        return Fail("monotonic trial " + std::to_string(t));
      }
    }
  }
  std::size_t family = 0;
  for (std::size_t m = 1; m <= 10; ++m) {
    for (std::size_t n = 1; n <= m; ++n) {
      ++family;
      std::size_t size = MinAgreeableSizeOracle(GenAgreeableTight(n, m));
      if (size != (m + n) / 2) {
        return Fail(Fmt("tight family n=%.0f m=%.0f has minimum %.0f", n, m, size));
      }
    }
  }
  return {true, Fmt("200 instances within bound and agreeable; %.0f tight instances "
                    "meet floor((m+n)/2)", static_cast<double>(family))};
}

Outcome Criterion10() {
  std::mt19937_64 rng(1010);
  std::uniform_int_distribution<int> frac(0, 1000);
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    std::size_t m = 1 + t % 8;
    Instance inst = GenRandom(1 + t % 3, m, rng(), 1000000);
    UtilityOracle f = MakeOracle(inst);
    RationalVector x(m);
    for (auto& v : x) v = MakeRational(frac(rng), 1000);
    for (std::size_t i = 0; i < inst.num_agents(); ++i) {
      Rational direct = AdditiveValue(inst, i, x);
      if (LovaszExtension(f, i, x) != direct) return Fail("Lovasz point " + std::to_string(t));
      double gap = std::abs(ToDouble(MultilinearExtension(f, i, x) - direct));
      worst = std::max(worst, gap);
      if (gap > 1e-12) return Fail("multilinear point " + std::to_string(t));
    }
  }
  for (int t = 0; t < 100; ++t) {
    std::size_t m = 1 + t % 8;
    UtilityOracle f = MakeOracle(MixedSpec(t % 3, 1, m, rng()));
    RationalVector x(m);
    for (auto& v : x) v = MakeRational(frac(rng), 1000);
    RationalVector y = x;
    std::size_t j = rng() % m;
    y[j] += (1 - y[j]) * MakeRational(frac(rng), 1000);
    if (LovaszExtension(f, 0, y) < LovaszExtension(f, 0, x) ||
        MultilinearExtension(f, 0, y) < MultilinearExtension(f, 0, x)) {
      return Fail("monotonicity at increase " + std::to_string(t));
    }
  }
  return {true, Fmt("100 points: Lovasz exact, multilinear gap %.1e; 100 increases "
                    "monotone", worst)};
}

int Main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"halving contract", Criterion1},
      {"random instances need min(n,m) cuts", Criterion2},
      {"partition dichotomy", Criterion3},
      {"k-splitting tightness", Criterion4},
      {"greedy one cut", Criterion5},
      {"irrational multilinear halving", Criterion6},
      {"line lower bound", Criterion7},
      {"two-knife Exact1", Criterion8},
      {"agreeable sets", Criterion9},
      {"extension identities", Criterion10},
  };
  int failures = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    Outcome out;
    try {
      out = criteria[c].second();
    } catch (const std::exception& e) {
      out = Fail(std::string("exception: ") + e.what());
    }
    if (!out.pass) ++failures;
    std::printf("criterion %2zu %s  %s: %s\n", c + 1, out.pass ? "PASS" : "FAIL",
                criteria[c].first, out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace consensus

int main() { return consensus::Main(); }
