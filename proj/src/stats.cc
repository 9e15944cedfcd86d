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

#include "consensus/stats.h"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <variant>

#include "consensus/additive.h"
#include "consensus/generators.h"
#include "consensus/oracles.h"

namespace consensus {
namespace {

void CheckGuard(const RandomMinCutsParams& p) {
  if (p.n == 0 || p.n > kMinCutsStatsMaxAgents || p.m > kMinCutsStatsMaxItems) {
    throw GuardError("random min-cut statistics need 1 <= n <= " +
                     std::to_string(kMinCutsStatsMaxAgents) + " and m <= " +
                     std::to_string(kMinCutsStatsMaxItems));
  }
}

void CheckGuard(const GreedySuccessParams& p) {
  if (p.m > kGreedyStatsMaxItems) {
    throw GuardError("greedy statistics are limited to m <= " +
                     std::to_string(kGreedyStatsMaxItems));
  }
  if (p.k < 2) throw std::invalid_argument("greedy statistics need k >= 2");
}

std::size_t MinCutsTrial(const RandomMinCutsParams& p, std::size_t trial) {
  const Instance instance = GenRandom(p.n, p.m, p.seed + trial, p.denom);
  return MinCutItemsOracleSerial(instance, Ratios::Halving()).min_cut_items;
}

bool GreedyTrial(const GreedySuccessParams& p, std::size_t trial) {
  const Instance instance = GenRandom(1, p.m, p.seed + trial, p.denom);
  const GreedyOutcome outcome = GreedyOneCut(instance.row(0), Ratios::Uniform(p.k));
  const auto* split = std::get_if<FractionalSplit>(&outcome);
  return split != nullptr && CutItems(*split).size() <= 1;
}

RandomMinCutsReport Summarize(const RandomMinCutsParams& p,
                              std::vector<std::size_t> cuts) {
  RandomMinCutsReport report{p, std::move(cuts), {}, 0};
  const std::size_t bound = std::min(p.n, p.m);
  for (std::size_t c : report.min_cuts) {
    ++report.histogram[c];
    if (c == bound) ++report.at_bound;
  }
  return report;
}

GreedySuccessReport Summarize(const GreedySuccessParams& p,
                              const std::vector<char>& ok) {
  GreedySuccessReport report{p, {}, 0};
  for (char b : ok) {
    report.success.push_back(b != 0);
    report.successes += b != 0;
  }
  return report;
}

// Runs body(t) for every trial on the OpenMP team and rethrows the first
// exception afterwards; exceptions must not escape a parallel region.
template <typename Body>
void ParallelTrials(std::size_t trials, int threads, Body&& body) {
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(std::max(threads, 1))
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
    try {
      body(static_cast<std::size_t>(t));
    } catch (...) {
#pragma omp critical(consensus_trial_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

RandomMinCutsReport RunRandomMinCuts(const RandomMinCutsParams& params,
                                     int threads) {
  CheckGuard(params);
  std::vector<std::size_t> cuts(params.trials);
  ParallelTrials(params.trials, threads,
                 [&](std::size_t t) { cuts[t] = MinCutsTrial(params, t); });
  return Summarize(params, std::move(cuts));
}

RandomMinCutsReport RunRandomMinCutsSerial(const RandomMinCutsParams& params) {
  CheckGuard(params);
  std::vector<std::size_t> cuts(params.trials);
  for (std::size_t t = 0; t < params.trials; ++t) cuts[t] = MinCutsTrial(params, t);
  return Summarize(params, std::move(cuts));
}

GreedySuccessReport RunGreedySuccess(const GreedySuccessParams& params,
                                     int threads) {
  CheckGuard(params);
  std::vector<char> ok(params.trials, 0);
  ParallelTrials(params.trials, threads,
                 [&](std::size_t t) { ok[t] = GreedyTrial(params, t); });
  return Summarize(params, ok);
}

GreedySuccessReport RunGreedySuccessSerial(const GreedySuccessParams& params) {
  CheckGuard(params);
  std::vector<char> ok(params.trials, 0);
  for (std::size_t t = 0; t < params.trials; ++t) ok[t] = GreedyTrial(params, t);
  return Summarize(params, ok);
}

int DefaultThreadCount() {
  if (const char* env = std::getenv("CONSENSUS_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<int>(value);
  }
  return omp_get_max_threads();
}

}  // namespace consensus
