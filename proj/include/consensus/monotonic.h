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

#ifndef CONSENSUS_MONOTONIC_H_
#define CONSENSUS_MONOTONIC_H_

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <variant>
#include <vector>

#include "consensus/rational.h"
#include "consensus/types.h"

namespace consensus {

// Black-box monotone set function per agent, with u_i(empty) = 0. Every
// query is counted per agent; the counters are relaxed atomics, so
// concurrent read-only use is fine.
class UtilityOracle {
 public:
  using Function = std::function<Rational(std::size_t agent, const ItemSet&)>;

  UtilityOracle(std::size_t num_agents, std::size_t num_items, Function f);

  std::size_t num_agents() const { return num_agents_; }
  std::size_t num_items() const { return num_items_; }

  Rational Value(std::size_t agent, const ItemSet& set) const;

  std::uint64_t calls(std::size_t agent) const;
  std::uint64_t total_calls() const;
  void ResetCalls() const;

 private:
  std::size_t num_agents_;
  std::size_t num_items_;
  Function f_;
  std::unique_ptr<std::atomic<std::uint64_t>[]> calls_;
};

// u_i(M') = sum_j f_ij(x_j) u_i(j), where f_ij is 0 up to the cap c_ij, 1 from
// 1 - c_ij on, and linear in between.
struct SymmetricThresholdUtility {
  SymmetricThresholdUtility(Instance base, RationalMatrix caps);

  Instance base;
  RationalMatrix caps;  // n x m, each in [0, 1/2)
};

Rational EvalSymmetricThreshold(const SymmetricThresholdUtility& utility,
                                std::size_t agent, const RationalVector& x);

// u_i(S) = total weight of the universe elements covered by the items in S.
struct CoverageAgent {
  RationalVector weights;                       // per universe element, >= 0
  std::vector<std::vector<std::size_t>> covers;  // per item
};

struct CoverageUtility {
  std::size_t num_items = 0;
  std::vector<CoverageAgent> agents;
};

// Explicit value table; values[i][mask] with bit j standing for item j.
struct TableUtility {
  std::size_t num_items = 0;
  RationalMatrix values;
};

using OracleSpec = std::variant<Instance, SymmetricThresholdUtility,
                                CoverageUtility, TableUtility>;

UtilityOracle MakeOracle(const Instance& additive);
UtilityOracle MakeOracle(const SymmetricThresholdUtility& utility);
UtilityOracle MakeOracle(const CoverageUtility& utility);
UtilityOracle MakeOracle(const TableUtility& utility);
UtilityOracle MakeOracle(const OracleSpec& spec);

// The two-agent, three-item instance whose multilinear-extension halvings
// are all irrational.
TableUtility Table1Utility();

// Chain-based extension. Coordinates are sorted in decreasing order (equal
// coordinates by item index) and the value is sum_i lambda_i f(S_i) over the
// resulting chain. Terms with lambda_i = 0 are not queried.
Rational LovaszExtension(const UtilityOracle& f, std::size_t agent,
                         const RationalVector& x);

inline constexpr std::size_t kMultilinearMaxItems = 20;

// Expectation of f over independent inclusion of item j with probability
// x_j. Subsets of probability zero are not queried.
Rational MultilinearExtension(const UtilityOracle& f, std::size_t agent,
                              const RationalVector& x);

struct DiscreteHalving {
  ItemSet m0, m1, m2;
};

// u_i(M0 u M1) >= u_i(M2) and u_i(M0 u M2) >= u_i(M1) for every agent.
bool IsDiscreteHalving(const UtilityOracle& f, const DiscreteHalving& h);

inline constexpr std::size_t kDiscreteHalvingMaxAgents = 4;

// Brute force over at most n cuts along the index order. A cut goes through
// an item (the item joins M0) or sits in a gap; each block of whole items
// between cuts goes wholly to M1 or M2. Placements are tried by increasing
// |M0|, so the first valid triple has |M0| minimal within that family, and at
// most min(n, m).
DiscreteHalving SolveDiscreteHalving(const UtilityOracle& f);

// Items lie on a circle in index order; gap g sits just before item g. With
// knives at gaps a and b, the first part is the arc from b to a and the
// second part is the arc from a to b, so moving the first knife clockwise
// hands an item from the second part to the first.
struct CircleState {
  std::vector<std::size_t> order;
  std::size_t knife1 = 0, knife2 = 0;
  std::size_t initial1 = 0, initial2 = 0;
};

struct Exact1Result {
  ItemSet part1, part2;
  CircleState state;
  std::array<std::uint64_t, 2> oracle_calls{};
  std::size_t knife_moves = 0;
};

// Two-knife moving procedure. The partition stays Exact1 for agent 0 after
// every move (checked) and is returned as soon as it is also Exact1 for agent
// 1. Oracle answers are memoized per arc, so each arc costs one call.
Exact1Result AustinExact1(const UtilityOracle& f);

// Strong circle version of Exact1: for each agent and each part, the other
// part is empty or loses at most one of its end items to become no more
// valuable. Throws std::invalid_argument when the parts are not complementary
// contiguous arcs.
bool CheckExact1(const UtilityOracle& f, const ItemSet& part1,
                 const ItemSet& part2);

// Each agent that strictly prefers one part proposes an end item of it that
// restores the balance; the proposals form M0.
DiscreteHalving Exact1ToDiscrete(const UtilityOracle& f, const ItemSet& part1,
                                 const ItemSet& part2);

inline constexpr std::size_t kLovaszHalvingMaxAgents = 3;

// Exact halving for Lovasz-extended utilities with at most min(n, m) cuts.
// Enumerates the same (M0, blocks) family as SolveDiscreteHalving and, for
// each ordering of the fractions of the M0 items, solves the linear halving
// conditions under that ordering.
FractionalSplit SolveLovaszHalving(const UtilityOracle& f);

struct Table1Solution {
  Rational x;                  // fraction of items 2 and 3 in the first part
  double x_approx = 0;
  double quadratic_residual = 0;  // |4x^2 + 29x - 13|
  double agent1_equation = 0;     // |-13 + 23x2 + 6x3 + 4x2x3|
  std::array<double, 2> halving_residuals{};  // |F_i(M1) - F_i(M2)|
};

// Bisection on [0,1] for the root of 4x^2 + 29x - 13 down to width 1e-12,
// followed by evaluation of both agents' multilinear halving residuals with
// item 1 wholly in the first part.
Table1Solution SolveTable1Instance();

}  // namespace consensus

#endif  // CONSENSUS_MONOTONIC_H_
