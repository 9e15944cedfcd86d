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

#ifndef CONSENSUS_ORACLES_H_
#define CONSENSUS_ORACLES_H_

#include <cstddef>
#include <vector>

#include "consensus/monotonic.h"
#include "consensus/types.h"

namespace consensus {

inline constexpr std::size_t kMinCutsMaxItems = 12;
inline constexpr std::size_t kMinCutsMaxAgents = 6;
inline constexpr std::size_t kLineOracleMaxItems = 16;
inline constexpr std::size_t kAgreeableOracleMaxItems = 12;

struct MinCutsResult {
  std::size_t min_cut_items = 0;
  FractionalSplit witness;
};

// Exact minimum number of cut items over all consensus k-splittings with the
// given ratios. Candidate cut sets are tried in increasing size; for each,
// every assignment of the remaining items to whole parts is decided exactly
// by BoxFeasible. The first feasible candidate in enumeration order is
// returned. Candidates of one size are evaluated in parallel; the serial
// variant is the reference and gives identical results.
MinCutsResult MinCutItemsOracle(const Instance& instance, const Ratios& ratios);
MinCutsResult MinCutItemsOracleSerial(const Instance& instance,
                                      const Ratios& ratios);

// Halving specialization: for two parts, items cut equals cuts.
inline MinCutsResult MinCutsOracle(const Instance& instance) {
  return MinCutItemsOracle(instance, Ratios::Halving());
}

struct LineMinCutsResult {
  std::size_t min_cuts = 0;
  RationalVector first_part;  // fraction of each item in the first part
};

// Minimum number of cuts on the line `order` for a consensus 2-splitting.
// A cut sits either in a gap between neighbours or inside an item, and all
// material between two consecutive cuts belongs to one part. Configurations
// are enumerated by total cut count; each item holds at most two cuts since
// more never help.
LineMinCutsResult MinCutsLineOracle(const Instance& instance,
                                    const std::vector<std::size_t>& order,
                                    const Ratios& ratios);

struct SplitReport {
  RationalMatrix residuals;  // [agent][part] = u_i(M_l) - alpha_l u_i(M)
  std::vector<std::size_t> cut_items;
  std::size_t cut_count = 0;
  bool pass = false;
};

SplitReport VerifySplit(const Instance& instance, const FractionalSplit& split,
                        const Ratios& ratios);

// Smallest size of a set agreeable to every agent.
std::size_t MinAgreeableSizeOracle(const UtilityOracle& f);
std::size_t MinAgreeableSizeOracle(const Instance& instance);

}  // namespace consensus

#endif  // CONSENSUS_ORACLES_H_
