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

#include "consensus/generators.h"

#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace consensus {

Instance GenRandom(std::size_t n, std::size_t m, std::uint64_t seed,
                   std::uint64_t denom_bound) {
  if (denom_bound < 2) throw std::invalid_argument("denom_bound must be >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> numerator(0, denom_bound);
  RationalMatrix u(n, RationalVector(m));
  const mpz_class q(std::to_string(denom_bound));
  for (auto& row : u) {
    for (auto& value : row) {
      value = Rational(mpz_class(std::to_string(numerator(rng))), q);
      value.canonicalize();
    }
  }
  return Instance(n, m, std::move(u));
}

bool HasEqualSumBipartition(const std::vector<std::int64_t>& weights) {
  if (weights.size() > 62) throw GuardError("too many weights to enumerate");
  std::int64_t total = 0;
  for (std::int64_t w : weights) total += w;
  if (total % 2 != 0) return false;
  const std::uint64_t subsets = std::uint64_t{1} << weights.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < weights.size(); ++j) {
      if ((mask >> j) & 1) sum += weights[j];
    }
    if (2 * sum == total) return true;
  }
  return false;
}

PartitionReduction GenPartitionReduction(
    std::size_t n, const std::vector<std::int64_t>& weights) {
  if (n == 0) throw std::invalid_argument("reduction needs n >= 1");
  for (std::int64_t w : weights) {
    if (w <= 0) throw std::invalid_argument("weights must be positive");
  }
  const std::size_t r = weights.size();
  RationalMatrix u(n, RationalVector(n * r));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) u[i][i * r + j] = weights[j];
  }
  PartitionReduction out{Instance(n, n * r, std::move(u)), r, std::nullopt};
  if (r <= kPartitionCheckMaxWeights) {
    out.bipartition_exists = HasEqualSumBipartition(weights);
  }
  return out;
}

std::size_t SmallestFractionalBlock(const Ratios& ratios) {
  const std::size_t k = ratios.size();
  mpz_class lcd = 1;
  for (const Rational& a : ratios.values()) {
    mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), a.get_den().get_mpz_t());
  }
  // b = lcd - 1 always works (each fractional part is 1 - alpha_l), except
  // for lcd = 1, which cannot happen with k >= 2 positive ratios.
  for (std::size_t b = 1;; ++b) {
    Rational sum = 0;
    for (const Rational& a : ratios.values()) {
      const Rational scaled = a * static_cast<unsigned long>(b);
      mpz_class floor;
      mpz_fdiv_q(floor.get_mpz_t(), scaled.get_num_mpz_t(),
                 scaled.get_den_mpz_t());
      sum += scaled - floor;
    }
    if (sum > static_cast<long>(k) - 2) return b;
    if (mpz_class(static_cast<unsigned long>(b)) >= lcd) {
      throw TheoremViolation("no block size satisfies the fractional-part bound");
    }
  }
}

KSplitWorstCase GenKSplitWorstCase(std::size_t n, const Ratios& ratios) {
  if (n == 0) throw std::invalid_argument("worst case needs n >= 1");
  if (ratios.size() < 2) throw std::invalid_argument("worst case needs k >= 2");
  const std::size_t b = SmallestFractionalBlock(ratios);
  RationalMatrix u(n, RationalVector(n * b));
  const Rational share(1, static_cast<unsigned long>(b));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < b; ++p) u[i][i * b + p] = share;
  }
  return {Instance(n, n * b, std::move(u)), b};
}

LineLowerBound GenLineLowerBound(std::size_t n) {
  if (n < 2) throw std::invalid_argument("line lower bound needs n >= 2");
  const std::size_t primaries = n * n - 1;
  const std::size_t m = 2 * primaries - 1;
  RationalMatrix u(n, RationalVector(m));
  std::vector<bool> is_primary(m);
  for (std::size_t pos = 0; pos < m; ++pos) is_primary[pos] = pos % 2 == 0;
  // Primary item p (1-based) sits at position 2(p-1).
  const Rational primary_share(1, static_cast<unsigned long>(n + 1));
  for (std::size_t i = 1; i <= n - 1; ++i) {
    for (std::size_t s = 0; s <= n; ++s) {
      const std::size_t p = i + s * (n - 1);
      u[i - 1][2 * (p - 1)] = primary_share;
    }
  }
  const Rational secondary_share(1, static_cast<unsigned long>(n * n - 2));
  for (std::size_t pos = 1; pos < m; pos += 2) u[n - 1][pos] = secondary_share;

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  return {Instance(n, m, std::move(u)), std::move(order), std::move(is_primary),
          Ratios({Rational(1, static_cast<unsigned long>(n)),
                  Rational(static_cast<unsigned long>(n - 1),
                           static_cast<unsigned long>(n))})};
}

Instance GenAgreeableTight(std::size_t n, std::size_t m) {
  if (n == 0 || m < n) {
    throw std::invalid_argument("tight agreeable family needs 1 <= n <= m");
  }
  RationalMatrix u(n, RationalVector(m));
  for (std::size_t i = 0; i + 1 < n; ++i) u[i][i] = 1;
  for (std::size_t j = n - 1; j < m; ++j) u[n - 1][j] = 1;
  return Instance(n, m, std::move(u));
}

CoverageUtility GenRandomCoverage(std::size_t n, std::size_t m,
                                  std::size_t universe, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(1, 10);
  std::uniform_int_distribution<int> coin(0, 2);
  CoverageUtility out;
  out.num_items = m;
  out.agents.resize(n);
  for (CoverageAgent& agent : out.agents) {
    agent.weights.resize(universe);
    for (Rational& w : agent.weights) w = weight(rng);
    agent.covers.resize(m);
    for (auto& cover : agent.covers) {
      for (std::size_t e = 0; e < universe; ++e) {
        if (coin(rng) == 0) cover.push_back(e);
      }
    }
  }
  return out;
}

SymmetricThresholdUtility GenRandomSymmetricThreshold(
    std::size_t n, std::size_t m, std::uint64_t seed,
    std::uint64_t denom_bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> cap(0, 4);
  RationalMatrix caps(n, RationalVector(m));
  for (auto& row : caps) {
    for (auto& c : row) c = MakeRational(cap(rng), 10);
  }
  return SymmetricThresholdUtility(GenRandom(n, m, rng(), denom_bound),
                                   std::move(caps));
}

}  // namespace consensus
