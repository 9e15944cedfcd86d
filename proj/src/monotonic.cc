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

#include "consensus/monotonic.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "consensus/linalg.h"

namespace consensus {

// ---------------------------------------------------------------------------
// Oracles

UtilityOracle::UtilityOracle(std::size_t num_agents, std::size_t num_items,
                             Function f)
    : num_agents_(num_agents),
      num_items_(num_items),
      f_(std::move(f)),
      calls_(new std::atomic<std::uint64_t>[num_agents]) {
  if (num_agents_ == 0) throw std::invalid_argument("oracle needs n >= 1");
  for (std::size_t i = 0; i < num_agents_; ++i) calls_[i] = 0;
}

Rational UtilityOracle::Value(std::size_t agent, const ItemSet& set) const {
  if (agent >= num_agents_) throw std::invalid_argument("agent out of range");
  if (set.size() != num_items_) {
    throw std::invalid_argument("item set has wrong size");
  }
  calls_[agent].fetch_add(1, std::memory_order_relaxed);
  return f_(agent, set);
}

std::uint64_t UtilityOracle::calls(std::size_t agent) const {
  return calls_[agent].load(std::memory_order_relaxed);
}

std::uint64_t UtilityOracle::total_calls() const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < num_agents_; ++i) total += calls(i);
  return total;
}

void UtilityOracle::ResetCalls() const {
  for (std::size_t i = 0; i < num_agents_; ++i) calls_[i] = 0;
}

SymmetricThresholdUtility::SymmetricThresholdUtility(Instance base_utilities,
                                                     RationalMatrix cap_matrix)
    : base(std::move(base_utilities)), caps(std::move(cap_matrix)) {
  if (caps.size() != base.num_agents()) {
    throw std::invalid_argument("cap matrix needs one row per agent");
  }
  const Rational half(1, 2);
  for (const RationalVector& row : caps) {
    if (row.size() != base.num_items()) {
      throw std::invalid_argument("cap row length differs from m");
    }
    for (const Rational& c : row) {
      if (sgn(c) < 0 || c >= half) {
        throw std::invalid_argument("caps must lie in [0, 1/2)");
      }
    }
  }
}

Rational EvalSymmetricThreshold(const SymmetricThresholdUtility& utility,
                                std::size_t agent, const RationalVector& x) {
  const Instance& base = utility.base;
  if (agent >= base.num_agents()) {
    throw std::invalid_argument("agent out of range");
  }
  if (x.size() != base.num_items()) {
    throw std::invalid_argument("fraction vector has wrong length");
  }
  Rational value = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (sgn(x[j]) < 0 || x[j] > 1) {
      throw std::invalid_argument("fraction outside [0,1]");
    }
    const Rational& c = utility.caps[agent][j];
    Rational response;
    if (x[j] <= c) {
      response = 0;
    } else if (x[j] >= 1 - c) {
      response = 1;
    } else {
      response = (x[j] - c) / (1 - 2 * c);
    }
    value += response * base.utility(agent, j);
  }
  return value;
}

UtilityOracle MakeOracle(const Instance& additive) {
  return UtilityOracle(
      additive.num_agents(), additive.num_items(),
      [additive](std::size_t agent, const ItemSet& set) {
        Rational value = 0;
        for (std::size_t j = 0; j < set.size(); ++j) {
          if (set[j]) value += additive.utility(agent, j);
        }
        return value;
      });
}

UtilityOracle MakeOracle(const SymmetricThresholdUtility& utility) {
  // On whole items every response is 0 or 1.
  return UtilityOracle(
      utility.base.num_agents(), utility.base.num_items(),
      [utility](std::size_t agent, const ItemSet& set) {
        RationalVector x(set.size());
        for (std::size_t j = 0; j < set.size(); ++j) x[j] = set[j] ? 1 : 0;
        return EvalSymmetricThreshold(utility, agent, x);
      });
}

UtilityOracle MakeOracle(const CoverageUtility& utility) {
  for (const CoverageAgent& agent : utility.agents) {
    if (agent.covers.size() != utility.num_items) {
      throw std::invalid_argument("coverage agent needs one cover per item");
    }
    for (const Rational& w : agent.weights) {
      if (sgn(w) < 0) throw std::invalid_argument("negative coverage weight");
    }
    for (const auto& cover : agent.covers) {
      for (std::size_t e : cover) {
        if (e >= agent.weights.size()) {
          throw std::invalid_argument("cover references unknown element");
        }
      }
    }
  }
  return UtilityOracle(
      utility.agents.size(), utility.num_items,
      [utility](std::size_t agent, const ItemSet& set) {
        const CoverageAgent& a = utility.agents[agent];
        std::vector<bool> covered(a.weights.size(), false);
        for (std::size_t j = 0; j < set.size(); ++j) {
          if (!set[j]) continue;
          for (std::size_t e : a.covers[j]) covered[e] = true;
        }
        Rational value = 0;
        for (std::size_t e = 0; e < covered.size(); ++e) {
          if (covered[e]) value += a.weights[e];
        }
        return value;
      });
}

UtilityOracle MakeOracle(const TableUtility& utility) {
  if (utility.num_items >= 24) {
    throw GuardError("value tables are limited to fewer than 24 items");
  }
  const std::size_t size = std::size_t{1} << utility.num_items;
  for (const RationalVector& row : utility.values) {
    if (row.size() != size) {
      throw std::invalid_argument("value table needs 2^m entries per agent");
    }
    if (!IsZero(row[0])) {
      throw std::invalid_argument("value table must give the empty set 0");
    }
  }
  return UtilityOracle(
      utility.values.size(), utility.num_items,
      [utility](std::size_t agent, const ItemSet& set) {
        std::size_t mask = 0;
        for (std::size_t j = 0; j < set.size(); ++j) {
          if (set[j]) mask |= std::size_t{1} << j;
        }
        return utility.values[agent][mask];
      });
}

UtilityOracle MakeOracle(const OracleSpec& spec) {
  return std::visit([](const auto& s) { return MakeOracle(s); }, spec);
}

TableUtility Table1Utility() {
  // Masks over items {1,2,3} -> bits {0,1,2}:
  //   {} {1} {2} {1,2} {3} {1,3} {2,3} {1,2,3}
  TableUtility t;
  t.num_items = 3;
  auto row = [](std::initializer_list<int> v) {
    RationalVector out;
    for (int x : v) out.emplace_back(x);
    return out;
  };
  t.values = {row({0, 1, 10, 12, 2, 3, 14, 20}),
              row({0, 1, 2, 3, 10, 12, 14, 20})};
  return t;
}

// ---------------------------------------------------------------------------
// Extensions

namespace {

void CheckUnitCube(const UtilityOracle& f, const RationalVector& x) {
  if (x.size() != f.num_items()) {
    throw std::invalid_argument("point has wrong dimension");
  }
  for (const Rational& v : x) {
    if (sgn(v) < 0 || v > 1) throw std::invalid_argument("point outside [0,1]^m");
  }
}

}  // namespace

Rational LovaszExtension(const UtilityOracle& f, std::size_t agent,
                         const RationalVector& x) {
  CheckUnitCube(f, x);
  const std::size_t m = x.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });
  Rational value = 0;
  ItemSet chain(m, false);
  for (std::size_t pos = 0; pos < m; ++pos) {
    chain[order[pos]] = true;
    const Rational next = pos + 1 < m ? x[order[pos + 1]] : Rational(0);
    const Rational lambda = x[order[pos]] - next;
    if (!IsZero(lambda)) value += lambda * f.Value(agent, chain);
  }
  return value;
}

Rational MultilinearExtension(const UtilityOracle& f, std::size_t agent,
                              const RationalVector& x) {
  CheckUnitCube(f, x);
  const std::size_t m = x.size();
  if (m > kMultilinearMaxItems) {
    throw GuardError("multilinear extension is limited to " +
                     std::to_string(kMultilinearMaxItems) + " items");
  }
  Rational value = 0;
  ItemSet set(m, false);
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    Rational weight = 1;
    for (std::size_t j = 0; j < m && !IsZero(weight); ++j) {
      set[j] = (mask >> j) & 1;
      weight *= set[j] ? x[j] : Rational(1 - x[j]);
    }
    if (IsZero(weight)) continue;
    value += weight * f.Value(agent, set);
  }
  return value;
}

// ---------------------------------------------------------------------------
// Discrete halving and the shared block enumeration

namespace {

// Advances `c`, a sorted choice from [0, range), to the next combination in
// lexicographic order. Returns false after the last one.
bool NextCombination(std::vector<std::size_t>& c, std::size_t range) {
  const std::size_t t = c.size();
  std::size_t pos = t;
  while (pos > 0 && c[pos - 1] == range - t + pos - 1) --pos;
  if (pos == 0) return false;
  ++c[pos - 1];
  for (std::size_t q = pos; q < t; ++q) c[q] = c[q - 1] + 1;
  return true;
}

// Calls visit(cut, sides) for every placement of at most max_cuts cuts on the
// line, s of them through items (those form M0) and the rest in gaps, and
// every assignment of the resulting blocks; sides[j] is 0 for M0, 1 for M1,
// 2 for M2. Placements come in order of increasing s, then increasing gap
// count, then lexicographically. Stops early when visit returns true.
template <typename Visitor>
bool ForEachBlockAssignment(std::size_t m, std::size_t max_cuts,
                            Visitor&& visit) {
  const std::size_t gaps = m == 0 ? 0 : m - 1;  // gap g sits before item g+1
  for (std::size_t s = 0; s <= std::min(max_cuts, m); ++s) {
    for (std::size_t g = 0; g <= std::min(max_cuts - s, gaps); ++g) {
      std::vector<std::size_t> cut(s);
      std::iota(cut.begin(), cut.end(), 0);
      do {
        std::vector<std::size_t> gap(g);
        std::iota(gap.begin(), gap.end(), 0);
        do {
          std::vector<bool> is_cut(m, false), split_after(m, false);
          for (std::size_t c : cut) is_cut[c] = true;
          for (std::size_t q : gap) split_after[q] = true;
          // Blocks of whole items between cut items and gap cuts.
          std::vector<std::pair<std::size_t, std::size_t>> blocks;
          std::size_t begin = 0;
          for (std::size_t j = 0; j <= m; ++j) {
            bool boundary = j == m || is_cut[j];
            if (boundary) {
              if (j > begin) blocks.emplace_back(begin, j);
              begin = j + 1;
            } else if (split_after[j]) {
              blocks.emplace_back(begin, j + 1);
              begin = j + 1;
            }
          }

          std::vector<int> sides(m, 0);
          for (std::size_t mask = 0; mask < (std::size_t{1} << blocks.size());
               ++mask) {
            for (std::size_t b = 0; b < blocks.size(); ++b) {
              const int side = ((mask >> b) & 1) ? 2 : 1;
              for (std::size_t j = blocks[b].first; j < blocks[b].second; ++j) {
                sides[j] = side;
              }
            }
            if (visit(cut, sides)) return true;
          }
        } while (NextCombination(gap, gaps));
      } while (NextCombination(cut, m));
    }
  }
  return false;
}

ItemSet Union(const ItemSet& a, const ItemSet& b) {
  ItemSet out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] || b[j];
  return out;
}

}  // namespace

bool IsDiscreteHalving(const UtilityOracle& f, const DiscreteHalving& h) {
  const std::size_t m = f.num_items();
  if (h.m0.size() != m || h.m1.size() != m || h.m2.size() != m) {
    throw std::invalid_argument("discrete halving sets have wrong size");
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (int{h.m0[j]} + int{h.m1[j]} + int{h.m2[j]} != 1) {
      throw std::invalid_argument("M0, M1, M2 must partition the items");
    }
  }
  const ItemSet left = Union(h.m0, h.m1);
  const ItemSet right = Union(h.m0, h.m2);
  for (std::size_t i = 0; i < f.num_agents(); ++i) {
    if (f.Value(i, left) < f.Value(i, h.m2)) return false;
    if (f.Value(i, right) < f.Value(i, h.m1)) return false;
  }
  return true;
}

DiscreteHalving SolveDiscreteHalving(const UtilityOracle& f) {
  const std::size_t n = f.num_agents();
  const std::size_t m = f.num_items();
  if (n > kDiscreteHalvingMaxAgents) {
    throw GuardError("discrete halving brute force is limited to " +
                     std::to_string(kDiscreteHalvingMaxAgents) + " agents");
  }
  std::optional<DiscreteHalving> found;
  ForEachBlockAssignment(m, n, [&](const std::vector<std::size_t>&,
                                   const std::vector<int>& sides) {
    DiscreteHalving h{ItemSet(m), ItemSet(m), ItemSet(m)};
    for (std::size_t j = 0; j < m; ++j) {
      (sides[j] == 0 ? h.m0 : sides[j] == 1 ? h.m1 : h.m2)[j] = true;
    }
    if (!IsDiscreteHalving(f, h)) return false;
    found = std::move(h);
    return true;
  });
  if (!found) throw TheoremViolation("no discrete halving with |M0| <= n");
  return *found;
}

// ---------------------------------------------------------------------------
// Exact1 on a circle

namespace {

// Values of contiguous arcs, one oracle call per distinct (agent, arc).
class ArcValues {
 public:
  explicit ArcValues(const UtilityOracle& f) : f_(f), m_(f.num_items()) {}

  // Arc of `length` items starting at item `start`.
  const Rational& Get(std::size_t agent, std::size_t start, std::size_t length) {
    static const Rational kZero(0);
    if (length == 0) return kZero;
    start %= m_;
    const auto key = std::make_tuple(agent, start, length);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    ItemSet set(m_, false);
    for (std::size_t p = 0; p < length; ++p) set[(start + p) % m_] = true;
    return cache_.emplace(key, f_.Value(agent, set)).first->second;
  }

  // Bundle A is EF1 against B when B is empty or losing one end item makes B
  // no more valuable than A.
  bool Ef1(std::size_t agent, std::size_t a_start, std::size_t a_len,
           std::size_t b_start, std::size_t b_len) {
    if (b_len == 0) return true;
    const Rational value = Get(agent, a_start, a_len);
    if (value >= Get(agent, b_start + 1, b_len - 1)) return true;
    return b_len > 1 && value >= Get(agent, b_start, b_len - 1);
  }

  bool Exact1For(std::size_t agent, std::size_t knife1, std::size_t knife2) {
    // part1 = arc(knife2 -> knife1), part2 = arc(knife1 -> knife2)
    const std::size_t len1 = (knife1 + m_ - knife2) % m_;
    const std::size_t len2 = m_ - len1;
    return Ef1(agent, knife2, len1, knife1, len2) &&
           Ef1(agent, knife1, len2, knife2, len1);
  }

 private:
  const UtilityOracle& f_;
  std::size_t m_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> cache_;
};

ItemSet ArcSet(std::size_t m, std::size_t start, std::size_t length) {
  ItemSet set(m, false);
  for (std::size_t p = 0; p < length; ++p) set[(start + p) % m] = true;
  return set;
}

struct Arc {
  std::size_t start = 0;
  std::size_t length = 0;
};

// Start and length of a contiguous circular arc, or nullopt.
std::optional<Arc> AsArc(const ItemSet& set) {
  const std::size_t m = set.size();
  const std::size_t length = std::count(set.begin(), set.end(), true);
  if (length == 0 || length == m) return Arc{0, length};
  for (std::size_t s = 0; s < m; ++s) {
    if (set[s] && !set[(s + m - 1) % m]) {
      for (std::size_t p = 0; p < length; ++p) {
        if (!set[(s + p) % m]) return std::nullopt;
      }
      return Arc{s, length};
    }
  }
  return std::nullopt;
}

void CheckArcs(const ItemSet& part1, const ItemSet& part2, std::size_t m) {
  if (part1.size() != m || part2.size() != m) {
    throw std::invalid_argument("parts have wrong size");
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (part1[j] == part2[j]) {
      throw std::invalid_argument("parts must be complementary");
    }
  }
  if (!AsArc(part1) || !AsArc(part2)) {
    throw std::invalid_argument("parts must be contiguous arcs on the circle");
  }
}

// End items of an arc; for the whole circle every item can be an end.
std::vector<std::size_t> EndItems(const Arc& arc, std::size_t m) {
  if (arc.length == 0) return {};
  if (arc.length == m) {
    std::vector<std::size_t> all(m);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  const std::size_t last = (arc.start + arc.length - 1) % m;
  if (last == arc.start) return {arc.start};
  return {arc.start, last};
}

// Some end item j of `other` with u(mine) >= u(other \ {j}).
std::optional<std::size_t> Ef1Witness(const UtilityOracle& f, std::size_t agent,
                                      const ItemSet& mine, const ItemSet& other) {
  const std::size_t m = mine.size();
  const Arc arc = *AsArc(other);
  if (arc.length == 0) return std::nullopt;
  const Rational value = f.Value(agent, mine);
  for (std::size_t j : EndItems(arc, m)) {
    ItemSet reduced = other;
    reduced[j] = false;
    const Rational rest =
        arc.length == 1 ? Rational(0) : f.Value(agent, reduced);
    if (value >= rest) return j;
  }
  return std::nullopt;
}

}  // namespace

Exact1Result AustinExact1(const UtilityOracle& f) {
  if (f.num_agents() != 2) {
    throw std::invalid_argument("the two-knife procedure needs exactly 2 agents");
  }
  const std::size_t m = f.num_items();
  Exact1Result result;
  result.state.order.resize(m);
  std::iota(result.state.order.begin(), result.state.order.end(), 0);
  const std::array<std::uint64_t, 2> calls_before{f.calls(0), f.calls(1)};

  if (m <= 1) {
    result.part1 = ItemSet(m, true);
    result.part2 = ItemSet(m, false);
    return result;
  }

  ArcValues arcs(f);
  // Step 1: first knife at gap 0, second knife at the first gap that makes
  // the partition Exact1 for agent 0.
  std::size_t k1 = 0, k2 = 0;
  for (std::size_t g = 1; g < m; ++g) {
    if (arcs.Exact1For(0, 0, g)) {
      k2 = g;
      break;
    }
  }
  if (k2 == 0) throw TheoremViolation("no initial Exact1 knife position");
  const std::size_t init1 = k1, init2 = k2;
  auto next = [m](std::size_t g) { return (g + 1) % m; };

  std::size_t moves = 0;
  const std::size_t max_moves = 2 * m + 2;
  while (!arcs.Exact1For(1, k1, k2)) {
    if (k1 == init2 || k2 == init1) {
      // Step 4: advance the knife that has not yet reached its target.
      if (k1 == init2 && k2 == init1) {
        throw TheoremViolation("knives swapped without an Exact1 partition");
      }
      if (k1 == init2) {
        k2 = next(k2);
      } else {
        k1 = next(k1);
      }
      if (!arcs.Exact1For(0, k1, k2)) {
        throw TheoremViolation("step-4 move broke Exact1 for agent 0");
      }
    } else if (next(k1) != k2 && arcs.Exact1For(0, next(k1), k2)) {
      k1 = next(k1);
    } else if (next(k2) != k1 && arcs.Exact1For(0, k1, next(k2))) {
      k2 = next(k2);
    } else if (arcs.Exact1For(0, next(k1), next(k2))) {
      k1 = next(k1);
      k2 = next(k2);
    } else {
      throw TheoremViolation("no knife move keeps Exact1 for agent 0");
    }
    if (++moves > max_moves) {
      throw TheoremViolation("knives exceeded one revolution");
    }
  }

  const std::size_t len1 = (k1 + m - k2) % m;
  result.part1 = ArcSet(m, k2, len1);
  result.part2 = ArcSet(m, k1, m - len1);
  result.state.knife1 = k1;
  result.state.knife2 = k2;
  result.state.initial1 = init1;
  result.state.initial2 = init2;
  result.knife_moves = moves;
  result.oracle_calls = {f.calls(0) - calls_before[0],
                         f.calls(1) - calls_before[1]};
  return result;
}

bool CheckExact1(const UtilityOracle& f, const ItemSet& part1,
                 const ItemSet& part2) {
  if (f.num_agents() != 2) {
    throw std::invalid_argument("Exact1 is defined for 2 agents");
  }
  CheckArcs(part1, part2, f.num_items());
  for (std::size_t i = 0; i < 2; ++i) {
    const bool empty1 = std::none_of(part1.begin(), part1.end(), [](bool b) { return b; });
    const bool empty2 = std::none_of(part2.begin(), part2.end(), [](bool b) { return b; });
    if (!empty2 && !Ef1Witness(f, i, part1, part2)) return false;
    if (!empty1 && !Ef1Witness(f, i, part2, part1)) return false;
  }
  return true;
}

DiscreteHalving Exact1ToDiscrete(const UtilityOracle& f, const ItemSet& part1,
                                 const ItemSet& part2) {
  if (!CheckExact1(f, part1, part2)) {
    throw std::invalid_argument("partition is not Exact1");
  }
  const std::size_t m = f.num_items();
  DiscreteHalving h{ItemSet(m, false), part1, part2};
  for (std::size_t i = 0; i < 2; ++i) {
    const int order = cmp(f.Value(i, part1), f.Value(i, part2));
    if (order == 0) continue;
    const std::optional<std::size_t> item =
        order < 0 ? Ef1Witness(f, i, part1, part2) : Ef1Witness(f, i, part2, part1);
    h.m0[*item] = true;
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (h.m0[j]) h.m1[j] = h.m2[j] = false;
  }
  if (!IsDiscreteHalving(f, h)) {
    throw TheoremViolation("Exact1 rounding is not a discrete halving");
  }
  return h;
}

// ---------------------------------------------------------------------------
// Halving for Lovasz-extended utilities

FractionalSplit SolveLovaszHalving(const UtilityOracle& f) {
  const std::size_t n = f.num_agents();
  const std::size_t m = f.num_items();
  if (n > kLovaszHalvingMaxAgents) {
    throw GuardError("Lovasz halving is limited to " +
                     std::to_string(kLovaszHalvingMaxAgents) + " agents");
  }
  if (n >= m) {
    return FractionalSplit::FromFirstPart(RationalVector(m, Rational(1, 2)));
  }

  std::optional<RationalVector> found;
  ForEachBlockAssignment(m, n, [&](const std::vector<std::size_t>& cut,
                                   const std::vector<int>& sides) {
    const std::size_t t = cut.size();
    ItemSet whole1(m, false), whole2(m, false);
    for (std::size_t j = 0; j < m; ++j) {
      if (sides[j] == 1) whole1[j] = true;
      if (sides[j] == 2) whole2[j] = true;
    }
    // perm lists positions into `cut` in decreasing order of their fraction.
    std::vector<std::size_t> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      AffineSystem system(t);
      for (std::size_t i = 0; i < n; ++i) {
        // Part one: chain whole1, whole1 + cut[perm[0]], ...; the increment
        // of the a-th chain set is weighted by x_{perm[a]}.
        RationalVector coefficients(t);
        ItemSet chain = whole1;
        Rational previous = f.Value(i, chain);
        Rational constant = previous;
        for (std::size_t a = 0; a < t; ++a) {
          chain[cut[perm[a]]] = true;
          const Rational value = f.Value(i, chain);
          coefficients[perm[a]] += value - previous;
          previous = value;
        }
        // Part two sees 1 - x, so the chain grows from whole2 in the reverse
        // order; its a-th increment is weighted by 1 - x_{perm[t-1-a]}.
        chain = whole2;
        previous = f.Value(i, chain);
        constant -= previous;
        for (std::size_t a = 0; a < t; ++a) {
          const std::size_t p = perm[t - 1 - a];
          chain[cut[p]] = true;
          const Rational value = f.Value(i, chain);
          const Rational increment = value - previous;
          constant -= increment;
          coefficients[p] += increment;
          previous = value;
        }
        system.AddRow(std::move(coefficients), -constant);
      }
      std::vector<Inequality> ordering;
      for (std::size_t a = 0; a + 1 < t; ++a) {
        RationalVector row(t);
        row[perm[a + 1]] = 1;
        row[perm[a]] = -1;
        ordering.push_back({std::move(row), Rational(0)});
      }
      const std::optional<RationalVector> fractions =
          BoxFeasible(system, RationalVector(t, Rational(0)),
                      RationalVector(t, Rational(1)), ordering);
      if (fractions) {
        RationalVector x(m);
        for (std::size_t j = 0; j < m; ++j) x[j] = sides[j] == 1 ? 1 : 0;
        for (std::size_t c = 0; c < t; ++c) x[cut[c]] = (*fractions)[c];
        found = std::move(x);
        return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  });
  if (!found) throw TheoremViolation("no Lovasz halving with at most n cuts");

  RationalVector other(m);
  for (std::size_t j = 0; j < m; ++j) other[j] = 1 - (*found)[j];
  for (std::size_t i = 0; i < n; ++i) {
    if (LovaszExtension(f, i, *found) != LovaszExtension(f, i, other)) {
      throw TheoremViolation("Lovasz halving failed re-evaluation");
    }
  }
  return FractionalSplit::FromFirstPart(*found);
}

// ---------------------------------------------------------------------------
// Irrational multilinear instance

Table1Solution SolveTable1Instance() {
  auto quadratic = [](const Rational& x) -> Rational {
    return 4 * x * x + 29 * x - 13;
  };
  Rational lo = 0, hi = 1;
  const Rational tolerance = ParseRational("1/1000000000000");
  while (hi - lo > tolerance) {
    const Rational mid = (lo + hi) / 2;
    if (sgn(quadratic(mid)) <= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  Table1Solution s;
  s.x = (lo + hi) / 2;
  s.x_approx = ToDouble(s.x);
  s.quadratic_residual = std::abs(ToDouble(quadratic(s.x)));
  s.agent1_equation =
      std::abs(ToDouble(Rational(-13 + 23 * s.x + 6 * s.x + 4 * s.x * s.x)));

  const UtilityOracle f = MakeOracle(Table1Utility());
  const RationalVector first{Rational(1), s.x, s.x};
  const RationalVector second{Rational(0), Rational(1 - s.x), Rational(1 - s.x)};
  for (std::size_t i = 0; i < 2; ++i) {
    s.halving_residuals[i] = std::abs(ToDouble(Rational(
        MultilinearExtension(f, i, first) - MultilinearExtension(f, i, second))));
  }
  return s;
}

}  // namespace consensus
