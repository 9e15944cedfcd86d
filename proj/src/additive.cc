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

#include "consensus/additive.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "consensus/linalg.h"

namespace consensus {
namespace {

// Utilities restricted to `free_items`. Moving x along a kernel vector of
// this matrix keeps every agent's value fixed; the leftmost kernel vector is
// the second solution of the reduced system minus x. Using only the first n+1
// unpinned items gives the same direction as the full unpinned system: the
// leftmost dependent column of the full matrix is among them.
RationalMatrix WindowUtilities(const Instance& instance,
                               const std::vector<std::size_t>& free_items) {
  RationalMatrix a(instance.num_agents());
  for (std::size_t i = 0; i < instance.num_agents(); ++i) {
    a[i].reserve(free_items.size());
    for (std::size_t j : free_items) a[i].push_back(instance.utility(i, j));
  }
  return a;
}

TwoSplitResult PinAndMove(const Instance& instance, const Rational& alpha) {
  const std::size_t m = instance.num_items();
  RationalVector x(m, alpha);
  HalvingTrace trace;
  if (instance.num_agents() >= m) {
    return {FractionalSplit::FromFirstPart(x), std::move(trace)};
  }

  const std::size_t window = instance.num_agents() + 1;
  trace.pinned.reserve(m);
  trace.iterations.reserve(m);
  std::vector<bool> pinned(m, false);
  while (true) {
    std::vector<std::size_t> free_items;
    for (std::size_t j = 0; j < m && free_items.size() < window; ++j) {
      if (!pinned[j]) free_items.push_back(j);
    }
    const std::optional<RationalVector> direction = LeftmostKernelVector(
        WindowUtilities(instance, free_items), free_items.size());
    if (!direction) break;
    const RationalVector& d = *direction;

    std::optional<Rational> best;
    std::size_t best_pos = 0;
    for (std::size_t p = 0; p < free_items.size(); ++p) {
      const int dir = sgn(d[p]);
      if (dir == 0) continue;
      const Rational& xj = x[free_items[p]];
      const Rational gamma = dir > 0 ? Rational((1 - xj) / d[p]) : Rational(-xj / d[p]);
      if (!best || gamma < *best) {
        best = gamma;
        best_pos = p;
      }
    }
    if (!best) throw TheoremViolation("second solution equals the current one");
    const Rational& gamma = *best;
    for (std::size_t p = 0; p < free_items.size(); ++p) {
      if (!IsZero(d[p])) x[free_items[p]] += gamma * d[p];
    }
    const std::size_t star = free_items[best_pos];
    if (x[star] != 0 && x[star] != 1) {
      throw TheoremViolation("pinned item is not integral");
    }
    pinned[star] = true;
    trace.pinned.emplace_back(star, x[star]);
    trace.iterations.push_back({star, gamma, x});
  }
  for (std::size_t i = 0; i < instance.num_agents(); ++i) {
    if (AdditiveValue(instance, i, x) != alpha * instance.Total(i)) {
      throw TheoremViolation("pinned fractions no longer solve the system");
    }
  }
  return {FractionalSplit::FromFirstPart(x), std::move(trace)};
}

}  // namespace

TwoSplitResult SolveHalving(const Instance& instance) {
  return PinAndMove(instance, Rational(1, 2));
}

TwoSplitResult SolveTwoSplitting(const Instance& instance,
                                 const Ratios& ratios) {
  if (ratios.size() != 2) {
    throw std::invalid_argument("two-splitting needs exactly two ratios");
  }
  return PinAndMove(instance, ratios[0]);
}

FractionalSplit SolveKSplitting(const Instance& instance,
                                const Ratios& ratios) {
  const std::size_t k = ratios.size();
  if (k < 2) throw std::invalid_argument("k-splitting needs k >= 2");
  if (k == 2) return SolveTwoSplitting(instance, ratios).split;

  const std::size_t m = instance.num_items();
  const std::size_t n = instance.num_agents();
  RationalVector remaining(m, Rational(1));
  RationalMatrix fractions(m, RationalVector(k));
  Rational tail = 1;
  for (std::size_t part = 0; part + 1 < k; ++part) {
    std::vector<std::size_t> active;
    for (std::size_t j = 0; j < m; ++j) {
      if (sgn(remaining[j]) > 0) active.push_back(j);
    }
    const Rational beta = ratios[part] / tail;
    tail -= ratios[part];
    if (active.empty()) continue;

    // The remaining fractional set, seen as whole items whose utility is
    // scaled by the remaining mass.
    RationalMatrix scaled(n, RationalVector(active.size()));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t p = 0; p < active.size(); ++p) {
        scaled[i][p] = instance.utility(i, active[p]) * remaining[active[p]];
      }
    }
    const Instance sub(n, active.size(), std::move(scaled),
                       instance.allow_negative());
    const FractionalSplit two =
        SolveTwoSplitting(sub, Ratios({beta, Rational(1 - beta)})).split;
    for (std::size_t p = 0; p < active.size(); ++p) {
      const std::size_t j = active[p];
      const Rational taken = two.fraction(p, 0) * remaining[j];
      fractions[j][part] = taken;
      remaining[j] -= taken;
    }
  }
  for (std::size_t j = 0; j < m; ++j) fractions[j][k - 1] = remaining[j];
  return FractionalSplit(k, std::move(fractions));
}

GreedyOutcome GreedyOneCut(const RationalVector& utilities,
                           const Ratios& ratios) {
  const std::size_t m = utilities.size();
  const std::size_t k = ratios.size();
  for (const Rational& u : utilities) {
    if (sgn(u) < 0) {
      throw std::invalid_argument("greedy splitter needs nonnegative utilities");
    }
  }
  if (m == 0) return ConditionFailed{};

  std::size_t star = 0;
  for (std::size_t j = 1; j < m; ++j) {
    if (utilities[j] > utilities[star]) star = j;
  }
  const Rational& top = utilities[star];
  const Rational threshold = top / static_cast<unsigned long>(k);
  Rational low_sum = 0;
  Rational total = 0;
  for (const Rational& u : utilities) {
    if (u <= threshold) low_sum += u;
    total += u;
  }
  if (low_sum < top * static_cast<unsigned long>(k)) return ConditionFailed{};

  std::vector<std::size_t> order;
  order.reserve(m - 1);
  for (std::size_t j = 0; j < m; ++j) {
    if (j != star) order.push_back(j);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return utilities[a] > utilities[b];
  });

  RationalVector targets(k);
  for (std::size_t l = 0; l < k; ++l) targets[l] = ratios[l] * total;
  RationalVector filled(k);
  RationalMatrix fractions(m, RationalVector(k));
  for (std::size_t j : order) {
    std::size_t part = 0;
    while (part < k && filled[part] + utilities[j] > targets[part]) ++part;
    if (part == k) {
      throw TheoremViolation("greedy assignment stalled although the "
                             "low-utility condition holds");
    }
    filled[part] += utilities[j];
    fractions[j][part] = 1;
  }
  if (IsZero(top)) {
    fractions[star][0] = 1;
  } else {
    for (std::size_t l = 0; l < k; ++l) {
      fractions[star][l] = (targets[l] - filled[l]) / top;
    }
  }
  return FractionalSplit(k, std::move(fractions));
}

bool CheckEpsHalving(const Instance& instance, const FractionalSplit& split,
                     const Rational& eps) {
  if (split.num_parts() != 2) {
    throw std::invalid_argument("eps-halving check needs a two-part split");
  }
  if (split.num_items() != instance.num_items()) {
    throw std::invalid_argument("split and instance disagree on m");
  }
  const RationalVector first = split.Column(0);
  const RationalVector second = split.Column(1);
  for (std::size_t i = 0; i < instance.num_agents(); ++i) {
    const Rational gap =
        abs(AdditiveValue(instance, i, first) - AdditiveValue(instance, i, second));
    if (gap > eps * instance.Total(i)) return false;
  }
  return true;
}

}  // namespace consensus
