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

#include "consensus/agreeable.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "consensus/additive.h"

namespace consensus {
namespace {

std::size_t SizeBound(std::size_t n, std::size_t m) {
  return std::min((m + n) / 2, m);
}

std::size_t Count(const ItemSet& set) {
  return static_cast<std::size_t>(std::count(set.begin(), set.end(), true));
}

}  // namespace

std::size_t CountBlocks(const ItemSet& set,
                        const std::vector<std::size_t>& order) {
  std::size_t blocks = 0;
  bool inside = false;
  for (std::size_t j : order) {
    if (set[j] && !inside) ++blocks;
    inside = set[j];
  }
  return blocks;
}

AgreeableResult AgreeableAdditive(const Instance& instance) {
  const std::size_t m = instance.num_items();
  const FractionalSplit split = SolveHalving(instance).split;
  std::size_t whole1 = 0, whole2 = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (split.fraction(j, 0) == 1) ++whole1;
    if (split.fraction(j, 1) == 1) ++whole2;
  }
  const std::size_t chosen = whole1 <= whole2 ? 0 : 1;

  AgreeableResult result;
  result.size_bound = SizeBound(instance.num_agents(), m);
  result.set.assign(m, false);
  std::vector<std::size_t> whole_chosen, cut, rest;
  for (std::size_t j = 0; j < m; ++j) {
    const Rational& x = split.fraction(j, chosen);
    if (x == 1) {
      whole_chosen.push_back(j);
    } else if (IsZero(x)) {
      rest.push_back(j);
    } else {
      cut.push_back(j);
    }
    result.set[j] = sgn(x) > 0;
  }
  result.line_order = whole_chosen;
  result.line_order.insert(result.line_order.end(), cut.begin(), cut.end());
  result.line_order.insert(result.line_order.end(), rest.begin(), rest.end());
  result.blocks = CountBlocks(result.set, result.line_order);
  return result;
}

AgreeableResult AgreeableMonotonic(const UtilityOracle& f) {
  const std::size_t n = f.num_agents();
  const std::size_t m = f.num_items();
  if (n > kAgreeableMaxAgents) {
    throw GuardError("agreeable brute force is limited to " +
                     std::to_string(kAgreeableMaxAgents) + " agents");
  }
  AgreeableResult result;
  result.size_bound = SizeBound(n, m);
  result.line_order.resize(m);
  std::iota(result.line_order.begin(), result.line_order.end(), 0);
  if (n >= m) {
    result.set.assign(m, true);
    result.blocks = CountBlocks(result.set, result.line_order);
    return result;
  }

  // Gap g sits between items g and g+1, g in [0, m-1).
  const std::size_t gaps = m - 1;
  for (std::size_t t = 1; t <= std::min(n, gaps); ++t) {
    std::vector<std::size_t> cut(t);
    std::iota(cut.begin(), cut.end(), 0);
    while (true) {
      for (bool take_leftmost : {true, false}) {
        ItemSet candidate(m, false);
        bool inside = take_leftmost;
        std::size_t next_cut = 0;
        for (std::size_t j = 0; j < m; ++j) {
          candidate[j] = inside;
          if (next_cut < t && cut[next_cut] == j) {
            inside = !inside;
            ++next_cut;
          }
        }
        if (Count(candidate) <= result.size_bound &&
            CheckAgreeable(f, candidate)) {
          result.set = std::move(candidate);
          result.blocks = CountBlocks(result.set, result.line_order);
          return result;
        }
      }
      std::size_t pos = t;
      while (pos > 0 && cut[pos - 1] == gaps - t + pos - 1) --pos;
      if (pos == 0) break;
      ++cut[pos - 1];
      for (std::size_t q = pos; q < t; ++q) cut[q] = cut[q - 1] + 1;
    }
  }
  throw TheoremViolation("no agreeable set within the size bound");
}

bool CheckAgreeable(const UtilityOracle& f, const ItemSet& set) {
  if (set.size() != f.num_items()) {
    throw std::invalid_argument("item set has wrong size");
  }
  const ItemSet rest = Complement(set);
  for (std::size_t i = 0; i < f.num_agents(); ++i) {
    if (f.Value(i, set) < f.Value(i, rest)) return false;
  }
  return true;
}

bool CheckAgreeable(const Instance& instance, const ItemSet& set) {
  if (set.size() != instance.num_items()) {
    throw std::invalid_argument("item set has wrong size");
  }
  for (std::size_t i = 0; i < instance.num_agents(); ++i) {
    Rational inside = 0, outside = 0;
    for (std::size_t j = 0; j < set.size(); ++j) {
      (set[j] ? inside : outside) += instance.utility(i, j);
    }
    if (inside < outside) return false;
  }
  return true;
}

}  // namespace consensus
