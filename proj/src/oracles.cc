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

#include "consensus/oracles.h"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "consensus/agreeable.h"
#include "consensus/linalg.h"

namespace consensus {
namespace {

std::vector<std::vector<std::size_t>> Combinations(std::size_t m, std::size_t s) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> c(s);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    std::size_t pos = s;
    while (pos > 0 && c[pos - 1] == m - s + pos - 1) --pos;
    if (pos == 0) break;
    ++c[pos - 1];
    for (std::size_t q = pos; q < s; ++q) c[q] = c[q - 1] + 1;
  }
  return out;
}

std::uint64_t Power(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

// One (cut set, whole-item assignment) candidate of the minimum-cut search.
class CutProblem {
 public:
  CutProblem(const Instance& instance, const Ratios& ratios)
      : instance_(instance), ratios_(ratios) {
    for (std::size_t i = 0; i < instance.num_agents(); ++i) {
      totals_.push_back(instance.Total(i));
    }
  }

  // `assignment` encodes the part of each uncut item in base k, lowest digit
  // for the lowest-index uncut item. Returns the split when feasible.
  std::optional<FractionalSplit> Decide(const std::vector<std::size_t>& cut,
                                        std::uint64_t assignment) const {
    const std::size_t n = instance_.num_agents();
    const std::size_t m = instance_.num_items();
    const std::size_t k = ratios_.size();
    const std::size_t s = cut.size();

    std::vector<int> part(m, -1);
    std::vector<bool> is_cut(m, false);
    for (std::size_t j : cut) is_cut[j] = true;
    for (std::size_t j = 0; j < m; ++j) {
      if (is_cut[j]) continue;
      part[j] = static_cast<int>(assignment % k);
      assignment /= k;
    }

    // Variables x_{c,l} for cut item c and part l < k-1; the last part holds
    // the remainder 1 - sum_l x_{c,l}.
    const std::size_t per_item = k - 1;
    AffineSystem system(s * per_item);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < per_item; ++l) {
        RationalVector coefficients(s * per_item);
        for (std::size_t c = 0; c < s; ++c) {
          coefficients[c * per_item + l] = instance_.utility(i, cut[c]);
        }
        Rational rhs = ratios_[l] * totals_[i];
        for (std::size_t j = 0; j < m; ++j) {
          if (part[j] == static_cast<int>(l)) rhs -= instance_.utility(i, j);
        }
        system.AddRow(std::move(coefficients), std::move(rhs));
      }
    }
    std::vector<Inequality> remainders;
    if (per_item > 1) {
      for (std::size_t c = 0; c < s; ++c) {
        RationalVector row(s * per_item);
        for (std::size_t l = 0; l < per_item; ++l) row[c * per_item + l] = 1;
        remainders.push_back({std::move(row), Rational(1)});
      }
    }
    std::optional<RationalVector> x;
    if (s == 0) {
      if (system.IsSatisfiedBy({})) x = RationalVector{};
    } else {
      x = BoxFeasible(system, RationalVector(s * per_item, Rational(0)),
                      RationalVector(s * per_item, Rational(1)), remainders);
    }
    if (!x) return std::nullopt;

    RationalMatrix fractions(m, RationalVector(k));
    for (std::size_t j = 0; j < m; ++j) {
      if (!is_cut[j]) fractions[j][part[j]] = 1;
    }
    for (std::size_t c = 0; c < s; ++c) {
      Rational rest = 1;
      for (std::size_t l = 0; l < per_item; ++l) {
        fractions[cut[c]][l] = (*x)[c * per_item + l];
        rest -= (*x)[c * per_item + l];
      }
      fractions[cut[c]][k - 1] = rest;
    }
    return FractionalSplit(k, std::move(fractions));
  }

 private:
  const Instance& instance_;
  const Ratios& ratios_;
  RationalVector totals_;
};

void CheckMinCutsGuard(const Instance& instance, const Ratios& ratios) {
  if (instance.num_items() > kMinCutsMaxItems ||
      instance.num_agents() > kMinCutsMaxAgents) {
    throw GuardError("minimum-cut oracle is limited to m <= " +
                     std::to_string(kMinCutsMaxItems) + " and n <= " +
                     std::to_string(kMinCutsMaxAgents));
  }
  if (ratios.size() < 2) throw std::invalid_argument("oracle needs k >= 2");
  if (Power(ratios.size(), instance.num_items()) > (std::uint64_t{1} << 24)) {
    throw GuardError("minimum-cut oracle: k^m exceeds 2^24 assignments");
  }
}

MinCutsResult MinCutItems(const Instance& instance, const Ratios& ratios,
                          bool parallel) {
  CheckMinCutsGuard(instance, ratios);
  const std::size_t m = instance.num_items();
  const std::size_t k = ratios.size();
  const CutProblem problem(instance, ratios);
  for (std::size_t s = 0; s <= m; ++s) {
    const auto subsets = Combinations(m, s);
    const std::uint64_t per_subset = Power(k, m - s);
    const std::uint64_t total = subsets.size() * per_subset;
    constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

    std::uint64_t best = kNone;
    if (parallel) {
      std::atomic<std::uint64_t> first{kNone};
      std::exception_ptr error;
      // Every candidate below the current best is decided, so the reduction
      // yields the first feasible candidate in enumeration order regardless
      // of the schedule.
#pragma omp parallel for schedule(dynamic, 16)
      for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx) {
        const auto u = static_cast<std::uint64_t>(idx);
        if (u >= first.load(std::memory_order_relaxed)) continue;
        try {
          if (problem.Decide(subsets[u / per_subset], u % per_subset)) {
            std::uint64_t seen = first.load();
            while (u < seen && !first.compare_exchange_weak(seen, u)) {
            }
          }
        } catch (...) {
#pragma omp critical(consensus_min_cuts_error)
          if (!error) error = std::current_exception();
        }
      }
      if (error) std::rethrow_exception(error);
      best = first.load();
    } else {
      for (std::uint64_t u = 0; u < total; ++u) {
        if (problem.Decide(subsets[u / per_subset], u % per_subset)) {
          best = u;
          break;
        }
      }
    }
    if (best != kNone) {
      return {s, *problem.Decide(subsets[best / per_subset], best % per_subset)};
    }
  }
  throw TheoremViolation("no consensus splitting found even with every item cut");
}

}  // namespace

MinCutsResult MinCutItemsOracle(const Instance& instance, const Ratios& ratios) {
  return MinCutItems(instance, ratios, /*parallel=*/true);
}

MinCutsResult MinCutItemsOracleSerial(const Instance& instance,
                                      const Ratios& ratios) {
  return MinCutItems(instance, ratios, /*parallel=*/false);
}

LineMinCutsResult MinCutsLineOracle(const Instance& instance,
                                    const std::vector<std::size_t>& order,
                                    const Ratios& ratios) {
  const std::size_t m = instance.num_items();
  const std::size_t n = instance.num_agents();
  if (m > kLineOracleMaxItems) {
    throw GuardError("line oracle is limited to " +
                     std::to_string(kLineOracleMaxItems) + " items");
  }
  if (ratios.size() != 2) throw std::invalid_argument("line oracle needs k = 2");
  if (order.size() != m) throw std::invalid_argument("order must list every item");
  {
    std::vector<bool> seen(m, false);
    for (std::size_t j : order) {
      if (j >= m || seen[j]) throw std::invalid_argument("order is not a permutation");
      seen[j] = true;
    }
  }

  RationalVector target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = ratios[0] * instance.Total(i);

  // Per line position: 0 whole, 1 one cut inside (side flips, item free),
  // 2 two cuts inside (side kept, item free). Per gap: 0 or 1 cut.
  std::vector<int> item_cuts(m, 0), gap_cuts(m > 0 ? m - 1 : 0, 0);
  std::optional<RationalVector> found;

  auto decide = [&](bool first_side_is_part1) -> bool {
    std::vector<std::size_t> free_items;
    RationalVector rhs = target;
    RationalVector x(m);
    bool side1 = first_side_is_part1;
    for (std::size_t pos = 0; pos < m; ++pos) {
      const std::size_t j = order[pos];
      if (item_cuts[pos] == 0) {
        if (side1) {
          x[j] = 1;
          for (std::size_t i = 0; i < n; ++i) rhs[i] -= instance.utility(i, j);
        }
      } else {
        free_items.push_back(j);
        if (item_cuts[pos] == 1) side1 = !side1;
      }
      if (pos + 1 < m && gap_cuts[pos]) side1 = !side1;
    }
    AffineSystem system(free_items.size());
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector coefficients;
      for (std::size_t j : free_items) coefficients.push_back(instance.utility(i, j));
      system.AddRow(std::move(coefficients), rhs[i]);
    }
    const std::size_t d = free_items.size();
    const auto y = BoxFeasible(system, RationalVector(d, Rational(0)),
                               RationalVector(d, Rational(1)));
    if (!y) return false;
    for (std::size_t p = 0; p < d; ++p) x[free_items[p]] = (*y)[p];
    found = std::move(x);
    return true;
  };

  // Slots alternate item, gap, item, ..., item: 2m - 1 in total.
  const std::size_t slots = m == 0 ? 0 : 2 * m - 1;
  std::function<bool(std::size_t, std::size_t)> place =
      [&](std::size_t slot, std::size_t budget) -> bool {
    if (slot == slots) {
      return budget == 0 && (decide(true) || decide(false));
    }
    const bool is_item = slot % 2 == 0;
    const std::size_t pos = slot / 2;
    const int max_cuts = is_item ? 2 : 1;
    for (int c = 0; c <= max_cuts && static_cast<std::size_t>(c) <= budget; ++c) {
      (is_item ? item_cuts[pos] : gap_cuts[pos]) = c;
      if (place(slot + 1, budget - c)) return true;
    }
    (is_item ? item_cuts[pos] : gap_cuts[pos]) = 0;
    return false;
  };

  for (std::size_t cuts = 0; cuts <= 2 * m; ++cuts) {
    if (place(0, cuts)) return {cuts, std::move(*found)};
  }
  throw TheoremViolation("line oracle found no splitting");
}

SplitReport VerifySplit(const Instance& instance, const FractionalSplit& split,
                        const Ratios& ratios) {
  if (split.num_items() != instance.num_items()) {
    throw std::invalid_argument("split has " + std::to_string(split.num_items()) +
                                " items, instance has " +
                                std::to_string(instance.num_items()));
  }
  if (split.num_parts() != ratios.size()) {
    throw std::invalid_argument("split has " + std::to_string(split.num_parts()) +
                                " parts but " + std::to_string(ratios.size()) +
                                " ratios were given");
  }
  SplitReport report;
  report.pass = true;
  const std::size_t k = split.num_parts();
  std::vector<RationalVector> columns;
  for (std::size_t l = 0; l < k; ++l) columns.push_back(split.Column(l));
  for (std::size_t i = 0; i < instance.num_agents(); ++i) {
    const Rational total = instance.Total(i);
    RationalVector row(k);
    for (std::size_t l = 0; l < k; ++l) {
      row[l] = AdditiveValue(instance, i, columns[l]) - ratios[l] * total;
      if (!IsZero(row[l])) report.pass = false;
    }
    report.residuals.push_back(std::move(row));
  }
  report.cut_items = CutItems(split);
  report.cut_count = CutCount(split);
  return report;
}

std::size_t MinAgreeableSizeOracle(const UtilityOracle& f) {
  const std::size_t m = f.num_items();
  if (m > kAgreeableOracleMaxItems) {
    throw GuardError("agreeable-size oracle is limited to " +
                     std::to_string(kAgreeableOracleMaxItems) + " items");
  }
  for (std::size_t s = 0; s <= m; ++s) {
    for (const auto& members : Combinations(m, s)) {
      if (CheckAgreeable(f, MakeItemSet(m, members))) return s;
    }
  }
  throw TheoremViolation("the full item set is not agreeable");
}

std::size_t MinAgreeableSizeOracle(const Instance& instance) {
  return MinAgreeableSizeOracle(MakeOracle(instance));
}

}  // namespace consensus
