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

#ifndef CONSENSUS_AGREEABLE_H_
#define CONSENSUS_AGREEABLE_H_

#include <cstddef>
#include <vector>

#include "consensus/monotonic.h"
#include "consensus/types.h"

namespace consensus {

struct AgreeableResult {
  ItemSet set;
  std::size_t size_bound = 0;          // min(floor((m+n)/2), m)
  std::vector<std::size_t> line_order;  // order the blocks are counted in
  std::size_t blocks = 0;
};

// Number of maximal runs of members of `set` along `order`.
std::size_t CountBlocks(const ItemSet& set, const std::vector<std::size_t>& order);

// Rounds the additive consensus halving: the part with no more whole items
// (the first part on ties) absorbs every cut item. The reported line order
// lists the chosen part's whole items, then the cut items, then the rest.
AgreeableResult AgreeableAdditive(const Instance& instance);

inline constexpr std::size_t kAgreeableMaxAgents = 4;

// Brute force over t = 1..n gap cuts along the index order (cut positions in
// lexicographic order); each cut pattern yields two alternating candidates,
// the one holding the leftmost item first. Returns the first candidate within
// the size bound that every agent finds agreeable.
AgreeableResult AgreeableMonotonic(const UtilityOracle& f);

// u_i(set) >= u_i(M \ set) for every agent.
bool CheckAgreeable(const UtilityOracle& f, const ItemSet& set);
bool CheckAgreeable(const Instance& instance, const ItemSet& set);

}  // namespace consensus

#endif  // CONSENSUS_AGREEABLE_H_
