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

#ifndef CONSENSUS_STATS_H_
#define CONSENSUS_STATS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace consensus {

inline constexpr std::size_t kMinCutsStatsMaxAgents = 4;
inline constexpr std::size_t kMinCutsStatsMaxItems = 8;
inline constexpr std::size_t kGreedyStatsMaxItems = 100000;

// Random additive instances (trial t uses seed + t) and their exact minimum
// number of cuts.
struct RandomMinCutsParams {
  std::size_t trials = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::uint64_t denom = 1000000;
};

struct RandomMinCutsReport {
  RandomMinCutsParams params;
  std::vector<std::size_t> min_cuts;  // per trial
  std::map<std::size_t, std::size_t> histogram;
  std::size_t at_bound = 0;  // trials whose minimum equals min(n, m)
};

// Single agent with uniform random utilities; success when the greedy
// splitter applies and cuts only one item.
struct GreedySuccessParams {
  std::size_t trials = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::uint64_t denom = 1000000;
};

struct GreedySuccessReport {
  GreedySuccessParams params;
  std::vector<bool> success;  // per trial
  std::size_t successes = 0;
};

// Trials run on up to `threads` OpenMP threads; results depend only on the
// parameters. The Serial variants are the single-threaded reference.
RandomMinCutsReport RunRandomMinCuts(const RandomMinCutsParams& params,
                                     int threads);
RandomMinCutsReport RunRandomMinCutsSerial(const RandomMinCutsParams& params);

GreedySuccessReport RunGreedySuccess(const GreedySuccessParams& params,
                                     int threads);
GreedySuccessReport RunGreedySuccessSerial(const GreedySuccessParams& params);

// CONSENSUS_THREADS if set to a positive integer, else the OpenMP default.
int DefaultThreadCount();

}  // namespace consensus

#endif  // CONSENSUS_STATS_H_
