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

#include "consensus/types.h"

#include <string>
#include <utility>

namespace consensus {

ItemSet MakeItemSet(std::size_t num_items,
                    const std::vector<std::size_t>& items) {
  ItemSet set(num_items, false);
  for (std::size_t j : items) {
    if (j >= num_items) throw std::out_of_range("item index out of range");
    set[j] = true;
  }
  return set;
}

std::vector<std::size_t> Members(const ItemSet& set) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < set.size(); ++j) {
    if (set[j]) out.push_back(j);
  }
  return out;
}

ItemSet Complement(const ItemSet& set) {
  ItemSet out(set.size());
  for (std::size_t j = 0; j < set.size(); ++j) out[j] = !set[j];
  return out;
}

Instance::Instance(RationalMatrix utilities, bool allow_negative)
    : num_items_(utilities.empty() ? 0 : utilities[0].size()),
      utilities_(std::move(utilities)),
      allow_negative_(allow_negative) {
  Validate(utilities_.size());
}

Instance::Instance(std::size_t num_agents, std::size_t num_items,
                   RationalMatrix utilities, bool allow_negative)
    : num_items_(num_items),
      utilities_(std::move(utilities)),
      allow_negative_(allow_negative) {
  Validate(num_agents);
}

void Instance::Validate(std::size_t num_agents) const {
  if (num_agents == 0) throw std::invalid_argument("instance needs n >= 1");
  if (utilities_.size() != num_agents) {
    throw std::invalid_argument("utility matrix has " +
                                std::to_string(utilities_.size()) +
                                " rows, expected n = " +
                                std::to_string(num_agents));
  }
  for (const RationalVector& row : utilities_) {
    if (row.size() != num_items_) {
      throw std::invalid_argument("utility row length differs from m");
    }
    if (!allow_negative_) {
      for (const Rational& u : row) {
        if (sgn(u) < 0) {
          throw std::invalid_argument(
              "negative utility in an instance without allow_negative");
        }
      }
    }
  }
}

Rational Instance::Total(std::size_t agent) const {
  Rational total = 0;
  for (const Rational& u : utilities_[agent]) total += u;
  return total;
}

FractionalSplit::FractionalSplit(std::size_t num_parts,
                                 RationalMatrix fractions)
    : num_parts_(num_parts), fractions_(std::move(fractions)) {
  if (num_parts_ == 0) throw std::invalid_argument("split needs k >= 1");
  for (std::size_t j = 0; j < fractions_.size(); ++j) {
    const RationalVector& row = fractions_[j];
    if (row.size() != num_parts_) {
      throw std::invalid_argument("split row " + std::to_string(j) +
                                  " has wrong number of parts");
    }
    Rational sum = 0;
    for (const Rational& x : row) {
      if (sgn(x) < 0 || x > 1) {
        throw std::invalid_argument("split entry outside [0,1] in row " +
                                    std::to_string(j));
      }
      sum += x;
    }
    if (sum != 1) {
      throw std::invalid_argument("split row " + std::to_string(j) +
                                  " does not sum to 1");
    }
  }
}

FractionalSplit FractionalSplit::FromFirstPart(const RationalVector& x) {
  RationalMatrix rows;
  rows.reserve(x.size());
  for (const Rational& xj : x) rows.push_back({xj, Rational(1 - xj)});
  return FractionalSplit(2, std::move(rows));
}

RationalVector FractionalSplit::Column(std::size_t part) const {
  RationalVector column;
  column.reserve(fractions_.size());
  for (const RationalVector& row : fractions_) column.push_back(row[part]);
  return column;
}

Ratios::Ratios(RationalVector alphas) : alphas_(std::move(alphas)) {
  if (alphas_.empty()) throw std::invalid_argument("ratios must be non-empty");
  Rational sum = 0;
  for (const Rational& a : alphas_) {
    if (sgn(a) <= 0) throw std::invalid_argument("ratios must be positive");
    sum += a;
  }
  if (sum != 1) throw std::invalid_argument("ratios must sum to exactly 1");
}

Ratios Ratios::Uniform(std::size_t k) {
  if (k == 0) throw std::invalid_argument("ratios must be non-empty");
  return Ratios(RationalVector(k, Rational(1, static_cast<unsigned long>(k))));
}

std::vector<std::size_t> CutItems(const FractionalSplit& split) {
  std::vector<std::size_t> cut;
  for (std::size_t j = 0; j < split.num_items(); ++j) {
    int positive = 0;
    for (const Rational& x : split.row(j)) positive += sgn(x) > 0;
    if (positive >= 2) cut.push_back(j);
  }
  return cut;
}

std::size_t CutCount(const FractionalSplit& split) {
  std::size_t cuts = 0;
  for (std::size_t j = 0; j < split.num_items(); ++j) {
    std::size_t positive = 0;
    for (const Rational& x : split.row(j)) positive += sgn(x) > 0;
    cuts += positive - 1;
  }
  return cuts;
}

Rational AdditiveValue(const Instance& instance, std::size_t agent,
                       const RationalVector& column) {
  if (agent >= instance.num_agents()) {
    throw std::invalid_argument("agent index out of range");
  }
  if (column.size() != instance.num_items()) {
    throw std::invalid_argument("column length " +
                                std::to_string(column.size()) +
                                " does not match m = " +
                                std::to_string(instance.num_items()));
  }
  Rational value = 0;
  const RationalVector& row = instance.row(agent);
  for (std::size_t j = 0; j < column.size(); ++j) {
    if (!IsZero(column[j])) value += column[j] * row[j];
  }
  return value;
}

}  // namespace consensus
