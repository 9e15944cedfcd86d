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

#ifndef CONSENSUS_ADDITIVE_H_
#define CONSENSUS_ADDITIVE_H_

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "consensus/rational.h"
#include "consensus/types.h"

namespace consensus {

// One pass of the pin-and-move loop.
struct HalvingIteration {
  std::size_t pinned_item;
  Rational step;              // gamma of the pinned item
  RationalVector x_snapshot;  // first-part fractions after the move
};

struct HalvingTrace {
  std::vector<HalvingIteration> iterations;
  std::vector<std::pair<std::size_t, Rational>> pinned;  // in pin order
};

struct TwoSplitResult {
  FractionalSplit split;
  HalvingTrace trace;
};

// Consensus halving with at most min(n, m) cut items.
//
// Starts from x = (1/2, ..., 1/2) and repeatedly asks the system
//   sum_j u_i(j) y_j = 1/2 u_i(M)  for every agent i,  y_j = x_j for pinned j
// for a second solution y. Moving x towards y by the largest step that keeps
// every coordinate in [0,1] drives one coordinate to 0 or 1; that item is
// pinned. The loop ends once x is the unique solution, at which point at most
// n coordinates remain unpinned. Works with negative utilities as well.
TwoSplitResult SolveHalving(const Instance& instance);

// Same loop started from x = alpha_1: the first part receives exactly
// alpha_1 u_i(M) for every agent. Requires ratios.size() == 2.
TwoSplitResult SolveTwoSplitting(const Instance& instance,
                                 const Ratios& ratios);

// Consensus k-splitting with at most (k-1) min(n, m) cuts, built by splitting
// off one part at a time from the remaining fractional set.
FractionalSplit SolveKSplitting(const Instance& instance, const Ratios& ratios);

struct ConditionFailed {};
using GreedyOutcome = std::variant<FractionalSplit, ConditionFailed>;

// Single-agent splitter that cuts only a most valuable item j*. Applies when
// the items worth at most u(j*)/k add up to at least k u(j*); otherwise
// returns ConditionFailed. Utilities must be nonnegative.
GreedyOutcome GreedyOneCut(const RationalVector& utilities,
                           const Ratios& ratios);

// |u_i(M_1) - u_i(M_2)| <= eps u_i(M) for every agent. k must be 2.
bool CheckEpsHalving(const Instance& instance, const FractionalSplit& split,
                     const Rational& eps);

}  // namespace consensus

#endif  // CONSENSUS_ADDITIVE_H_
