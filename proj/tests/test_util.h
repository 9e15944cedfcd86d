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


// Shared helpers and independent reference implementations for the tests.
// Nothing here calls into the library's solvers; the references are written
// from the definitions so that agreement is meaningful.

#ifndef CONSENSUS_TESTS_TEST_UTIL_H_
#define CONSENSUS_TESTS_TEST_UTIL_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "consensus/linalg.h"
#include "consensus/rational.h"
#include "consensus/types.h"

namespace consensus::testing {

inline Rational Q(const std::string& text) { return ParseRational(text); }

inline RationalVector QV(const std::vector<std::string>& items) {
  RationalVector out;
  for (const std::string& s : items) out.push_back(Q(s));
  return out;
}

inline Instance Inst(const std::vector<std::vector<std::string>>& rows,
                     bool allow_negative = false) {
  RationalMatrix u;
  for (const auto& row : rows) u.push_back(QV(row));
  return Instance(std::move(u), allow_negative);
}

// sum_j x_j u_i(j), straight from the definition.
inline Rational RefValue(const Instance& inst, std::size_t agent,
                         const RationalVector& x) {
  Rational total = 0;
  for (std::size_t j = 0; j < x.size(); ++j) total += x[j] * inst.utility(agent, j);
  return total;
}

// Random small-integer instance, optionally with negative entries.
inline Instance SmallRandomInstance(std::mt19937_64& rng, std::size_t n,
                                    std::size_t m, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  RationalMatrix u(n, RationalVector(m));
  for (auto& row : u) {
    for (auto& v : row) v = d(rng);
  }
  return Instance(std::move(u), lo < 0);
}

// Unique solution of a square-or-tall linear system, or nullopt when the
// system is inconsistent or underdetermined. Plain Gaussian elimination with
// a fresh implementation.
std::optional<RationalVector> RefSolveUnique(RationalMatrix a, RationalVector b);

// Feasibility of {A y = b, lower <= y <= upper, extra} by vertex
// enumeration: the region is a bounded polytope, so it is nonempty iff some
// choice of tight inequalities pins down a feasible point.
bool RefFeasible(const AffineSystem& system, const RationalVector& lower,
                 const RationalVector& upper,
                 const std::vector<Inequality>& extra = {});

// Smallest number of cut items over consensus halvings, by enumeration of
// cut sets and whole-item assignments decided with RefFeasible.
std::size_t RefMinCutItemsHalving(const Instance& inst);

// Smallest |S| with u_i(S) >= u_i(M \ S) for all i, over all subsets.
std::size_t RefMinAgreeableSize(
    std::size_t n, std::size_t m,
    const std::function<Rational(std::size_t, std::uint32_t)>& value);

// Path of the built CLI binary, injected by CMake.
std::string CliPath();

}  // namespace consensus::testing

#endif  // CONSENSUS_TESTS_TEST_UTIL_H_
