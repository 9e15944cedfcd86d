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

#ifndef CONSENSUS_TYPES_H_
#define CONSENSUS_TYPES_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "consensus/rational.h"

namespace consensus {

// Raised when an exponential brute force or a constant-n procedure is asked
// to run beyond its size guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a procedure whose success is a theorem fails anyway. Always an
// implementation bug.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Membership vector over the items [0, m).
using ItemSet = std::vector<bool>;

ItemSet MakeItemSet(std::size_t num_items, const std::vector<std::size_t>& items);
std::vector<std::size_t> Members(const ItemSet& set);
ItemSet Complement(const ItemSet& set);

// n agents, m items, additive utilities u_i(j).
class Instance {
 public:
  // One row per agent; every row must have the same length. Negative entries
  // are rejected unless `allow_negative` (mixed goods and chores).
  explicit Instance(RationalMatrix utilities, bool allow_negative = false);
  Instance(std::size_t num_agents, std::size_t num_items,
           RationalMatrix utilities, bool allow_negative = false);

  std::size_t num_agents() const { return utilities_.size(); }
  std::size_t num_items() const { return num_items_; }
  bool allow_negative() const { return allow_negative_; }

  const Rational& utility(std::size_t agent, std::size_t item) const {
    return utilities_[agent][item];
  }
  const RationalVector& row(std::size_t agent) const {
    return utilities_[agent];
  }
  const RationalMatrix& utilities() const { return utilities_; }

  // u_i(M).
  Rational Total(std::size_t agent) const;

 private:
  void Validate(std::size_t num_agents) const;

  std::size_t num_items_;
  RationalMatrix utilities_;
  bool allow_negative_;
};

// Partition of the items into k fractional sets. Row j holds the fraction of
// item j in each part; every entry is in [0,1] and every row sums to 1.
class FractionalSplit {
 public:
  FractionalSplit(std::size_t num_parts, RationalMatrix fractions);

  // k = 2 split with x_j in part 0 and 1 - x_j in part 1.
  static FractionalSplit FromFirstPart(const RationalVector& x);

  std::size_t num_parts() const { return num_parts_; }
  std::size_t num_items() const { return fractions_.size(); }
  const Rational& fraction(std::size_t item, std::size_t part) const {
    return fractions_[item][part];
  }
  const RationalVector& row(std::size_t item) const { return fractions_[item]; }
  const RationalMatrix& fractions() const { return fractions_; }

  RationalVector Column(std::size_t part) const;

 private:
  std::size_t num_parts_;
  RationalMatrix fractions_;
};

// Positive ratios alpha_1..alpha_k summing to exactly 1.
class Ratios {
 public:
  explicit Ratios(RationalVector alphas);

  static Ratios Uniform(std::size_t k);
  static Ratios Halving() { return Uniform(2); }

  std::size_t size() const { return alphas_.size(); }
  const Rational& operator[](std::size_t part) const { return alphas_[part]; }
  const RationalVector& values() const { return alphas_; }

 private:
  RationalVector alphas_;
};

// Items with a strictly positive fraction in at least two parts.
std::vector<std::size_t> CutItems(const FractionalSplit& split);

// Sum over items of (number of parts holding a positive fraction) - 1.
std::size_t CutCount(const FractionalSplit& split);

// Exact sum_j x_j u_i(j).
Rational AdditiveValue(const Instance& instance, std::size_t agent,
                       const RationalVector& column);

}  // namespace consensus

#endif  // CONSENSUS_TYPES_H_
