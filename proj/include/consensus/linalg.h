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

#ifndef CONSENSUS_LINALG_H_
#define CONSENSUS_LINALG_H_

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "consensus/rational.h"

namespace consensus {

// coefficients . y == rhs
struct AffineRow {
  RationalVector coefficients;
  Rational rhs;
};

struct AffineSystem {
  explicit AffineSystem(std::size_t vars) : num_vars(vars) {}

  std::size_t num_vars;
  std::vector<AffineRow> rows;

  void AddRow(RationalVector coefficients, Rational rhs);
  // Adds the unit row y_var == value.
  void Pin(std::size_t var, const Rational& value);

  bool IsSatisfiedBy(const RationalVector& y) const;
};

// coefficients . y <= bound
struct Inequality {
  RationalVector coefficients;
  Rational bound;
};

struct Unique {};
struct Second {
  RationalVector solution;
};
struct Infeasible {};
using SolveOutcome = std::variant<Unique, Second, Infeasible>;

// Rank of the coefficient matrix.
std::size_t Rank(const AffineSystem& system);

// Given a solution `current` of `system`, reports whether it is the only one.
// Otherwise returns another solution, obtained from the reduced row echelon
// form by setting the lowest-index free variable to current + 1 and keeping
// the remaining free variables at their current values.
SolveOutcome SolveOrSecond(const AffineSystem& system,
                           const RationalVector& current);

// For the row-major matrix `a` with `num_cols` columns, finds the leftmost
// column c that is a combination of the columns before it and returns the
// kernel vector d with d[c] = 1 and d zero beyond c. This is the direction
// SolveOrSecond moves along. Returns nullopt when all columns are independent.
// Works on integer rows by fraction-free elimination, so it stays fast when
// the entries are rationals with large common denominators.
std::optional<RationalVector> LeftmostKernelVector(const RationalMatrix& a,
                                                   std::size_t num_cols);

// Exact decision of {A y = b, lower <= y <= upper, extra rows}. Equalities are
// eliminated by Gauss-Jordan reduction; the remaining inequalities over the
// free variables go through Fourier-Motzkin elimination. Returns a witness
// satisfying every constraint, or nullopt.
std::optional<RationalVector> BoxFeasible(
    const AffineSystem& system, const RationalVector& lower,
    const RationalVector& upper, const std::vector<Inequality>& extra = {});

}  // namespace consensus

#endif  // CONSENSUS_LINALG_H_
