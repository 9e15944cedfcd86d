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

#ifndef CONSENSUS_GENERATORS_H_
#define CONSENSUS_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "consensus/monotonic.h"
#include "consensus/types.h"

namespace consensus {

// u_i(j) = p / denom_bound with p uniform in [0, denom_bound]. Reproducible
// for a given seed.
Instance GenRandom(std::size_t n, std::size_t m, std::uint64_t seed,
                   std::uint64_t denom_bound);

inline constexpr std::size_t kPartitionCheckMaxWeights = 22;

struct PartitionReduction {
  Instance instance;
  std::size_t num_weights = 0;
  // Whether the weights split into two halves of equal sum; decided by
  // exhaustive search when there are at most kPartitionCheckMaxWeights.
  std::optional<bool> bipartition_exists;
};

// Block-diagonal instance on n * r items: item (l, j) has index l * r + j and
// agent i values it at w_j when l == i, else 0.
PartitionReduction GenPartitionReduction(std::size_t n,
                                         const std::vector<std::int64_t>& weights);

// Exhaustive equal-sum bipartition check.
bool HasEqualSumBipartition(const std::vector<std::int64_t>& weights);

struct KSplitWorstCase {
  Instance instance;
  std::size_t block_size = 0;  // b
};

// Smallest b >= 1 with sum_l frac(alpha_l b) > k - 2.
std::size_t SmallestFractionalBlock(const Ratios& ratios);

// n disjoint blocks of b items; agent i values each item of block i at 1/b.
KSplitWorstCase GenKSplitWorstCase(std::size_t n, const Ratios& ratios);

struct LineLowerBound {
  Instance instance;
  std::vector<std::size_t> order;      // line order (identity)
  std::vector<bool> is_primary;        // per item
  Ratios ratios;                       // (1/n, (n-1)/n)
};

// n^2 - 1 primary items with n^2 - 2 secondary items between them. Agent
// i < n-1 values the primaries i, i+(n-1), ..., i+n(n-1) (1-based) at
// 1/(n+1); the last agent values every secondary at 1/(n^2-2).
LineLowerBound GenLineLowerBound(std::size_t n);

// n - 1 agents that each value one distinct item, and one agent that values
// the remaining m - n + 1 items equally. Every agreeable set has at least
// floor((m+n)/2) items. Requires 1 <= n <= m.
Instance GenAgreeableTight(std::size_t n, std::size_t m);

// Random monotone coverage functions: every item covers each of `universe`
// elements with probability 1/3; element weights are uniform in
// {1, ..., 10}.
CoverageUtility GenRandomCoverage(std::size_t n, std::size_t m,
                                  std::size_t universe, std::uint64_t seed);

// Caps drawn uniformly from {0, 1/10, ..., 4/10}.
SymmetricThresholdUtility GenRandomSymmetricThreshold(std::size_t n,
                                                      std::size_t m,
                                                      std::uint64_t seed,
                                                      std::uint64_t denom_bound);

}  // namespace consensus

#endif  // CONSENSUS_GENERATORS_H_
