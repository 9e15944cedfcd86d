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

#include "consensus/linalg.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "consensus/types.h"

namespace consensus {
namespace {

// Augmented matrix [A | b] brought to reduced row echelon form.
struct Echelon {
  RationalMatrix rows;
  std::vector<std::size_t> pivot_columns;  // pivot_columns[r] for row r < rank
  bool consistent = true;

  std::size_t rank() const { return pivot_columns.size(); }
};

Echelon Reduce(const AffineSystem& system) {
  const std::size_t nv = system.num_vars;
  Echelon e;
  e.rows.reserve(system.rows.size());
  for (const AffineRow& row : system.rows) {
    RationalVector aug = row.coefficients;
    aug.push_back(row.rhs);
    e.rows.push_back(std::move(aug));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < nv && rank < e.rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < e.rows.size() && IsZero(e.rows[pivot][col])) ++pivot;
    if (pivot == e.rows.size()) continue;
    std::swap(e.rows[rank], e.rows[pivot]);
    RationalVector& prow = e.rows[rank];
    if (prow[col] != 1) {
      const Rational inv = 1 / prow[col];
      for (std::size_t c = col; c <= nv; ++c) {
        if (!IsZero(prow[c])) prow[c] *= inv;
      }
    }
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      if (r == rank || IsZero(e.rows[r][col])) continue;
      const Rational factor = e.rows[r][col];
      RationalVector& row = e.rows[r];
      for (std::size_t c = col; c <= nv; ++c) {
        if (!IsZero(prow[c])) row[c] -= factor * prow[c];
      }
    }
    e.pivot_columns.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < e.rows.size(); ++r) {
    if (!IsZero(e.rows[r][nv])) e.consistent = false;
  }
  e.rows.resize(rank);
  return e;
}

// c . z <= b over the free variables.
struct Constraint {
  RationalVector coefficients;
  Rational bound;
};

// Scales so that the last nonzero coefficient has absolute value 1. Returns
// false for an all-zero row.
bool Normalize(Constraint& c) {
  for (std::size_t v = c.coefficients.size(); v-- > 0;) {
    if (IsZero(c.coefficients[v])) continue;
    const Rational scale = 1 / abs(c.coefficients[v]);
    if (scale != 1) {
      for (Rational& a : c.coefficients) a *= scale;
      c.bound *= scale;
    }
    return true;
  }
  return false;
}

bool ConstraintLess(const Constraint& a, const Constraint& b) {
  for (std::size_t v = 0; v < a.coefficients.size(); ++v) {
    const int c = cmp(a.coefficients[v], b.coefficients[v]);
    if (c != 0) return c < 0;
  }
  return a.bound < b.bound;
}

bool SameDirection(const Constraint& a, const Constraint& b) {
  return a.coefficients == b.coefficients;
}

// Sorts, and keeps only the tightest bound per coefficient direction.
void Deduplicate(std::vector<Constraint>& cs) {
  std::sort(cs.begin(), cs.end(), ConstraintLess);
  std::vector<Constraint> out;
  for (Constraint& c : cs) {
    if (!out.empty() && SameDirection(out.back(), c)) continue;
    out.push_back(std::move(c));
  }
  cs = std::move(out);
}

// Adds c to the set, or reports infeasibility when it is a violated constant.
bool Push(std::vector<Constraint>& cs, Constraint c) {
  if (Normalize(c)) {
    cs.push_back(std::move(c));
    return true;
  }
  return sgn(c.bound) >= 0;
}

}  // namespace

void AffineSystem::AddRow(RationalVector coefficients, Rational rhs) {
  if (coefficients.size() != num_vars) {
    throw std::invalid_argument("affine row has " +
                                std::to_string(coefficients.size()) +
                                " coefficients, expected " +
                                std::to_string(num_vars));
  }
  rows.push_back({std::move(coefficients), std::move(rhs)});
}

void AffineSystem::Pin(std::size_t var, const Rational& value) {
  RationalVector unit(num_vars);
  unit.at(var) = 1;
  rows.push_back({std::move(unit), value});
}

bool AffineSystem::IsSatisfiedBy(const RationalVector& y) const {
  if (y.size() != num_vars) return false;
  for (const AffineRow& row : rows) {
    Rational lhs = 0;
    for (std::size_t v = 0; v < num_vars; ++v) {
      if (!IsZero(row.coefficients[v])) lhs += row.coefficients[v] * y[v];
    }
    if (lhs != row.rhs) return false;
  }
  return true;
}

std::size_t Rank(const AffineSystem& system) {
  return Reduce(system).rank();
}

SolveOutcome SolveOrSecond(const AffineSystem& system,
                           const RationalVector& current) {
  if (current.size() != system.num_vars) {
    throw std::invalid_argument("current solution has wrong dimension");
  }
  const Echelon e = Reduce(system);
  if (!e.consistent) return Infeasible{};
  const std::size_t nv = system.num_vars;
  if (e.rank() == nv) return Unique{};

  std::vector<bool> is_pivot(nv, false);
  for (std::size_t col : e.pivot_columns) is_pivot[col] = true;
  std::size_t free_var = 0;
  while (is_pivot[free_var]) ++free_var;

  RationalVector y = current;
  y[free_var] = current[free_var] + 1;
  for (std::size_t r = 0; r < e.rank(); ++r) {
    const RationalVector& row = e.rows[r];
    Rational value = row[nv];
    for (std::size_t c = 0; c < nv; ++c) {
      if (!is_pivot[c] && !IsZero(row[c])) value -= row[c] * y[c];
    }
    y[e.pivot_columns[r]] = std::move(value);
  }
  return Second{std::move(y)};
}

std::optional<RationalVector> LeftmostKernelVector(const RationalMatrix& a,
                                                   std::size_t num_cols) {
  // Clear denominators row by row.
  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(a.size());
  for (const RationalVector& row : a) {
    if (row.size() != num_cols) {
      throw std::invalid_argument("matrix row has wrong length");
    }
    mpz_class scale = 1;
    for (const Rational& v : row) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
    }
    std::vector<mpz_class> ints;
    ints.reserve(num_cols);
    for (const Rational& v : row) ints.push_back(v.get_num() * (scale / v.get_den()));
    rows.push_back(std::move(ints));
  }

  // Bareiss elimination; every division below is exact.
  std::size_t rank = 0;
  std::size_t dependent = num_cols;
  mpz_class previous = 1;
  mpz_class scratch;
  for (std::size_t col = 0; col < num_cols; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) {
      dependent = col;
      break;
    }
    std::swap(rows[rank], rows[pivot]);
    const std::vector<mpz_class>& prow = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      std::vector<mpz_class>& row = rows[r];
      for (std::size_t c = col + 1; c < num_cols; ++c) {
        scratch = prow[col] * row[c] - row[col] * prow[c];
        mpz_divexact(row[c].get_mpz_t(), scratch.get_mpz_t(), previous.get_mpz_t());
      }
      row[col] = 0;
    }
    previous = prow[col];
    ++rank;
  }
  if (dependent == num_cols) return std::nullopt;

  // Columns before `dependent` are all pivots: back-substitute the upper
  // triangular block against minus the dependent column.
  RationalVector d(num_cols);
  d[dependent] = 1;
  for (std::size_t r = dependent; r-- > 0;) {
    Rational value = -Rational(rows[r][dependent]);
    for (std::size_t c = r + 1; c < dependent; ++c) {
      if (!IsZero(d[c])) value -= Rational(rows[r][c]) * d[c];
    }
    d[r] = value / Rational(rows[r][r]);
  }
  return d;
}

std::optional<RationalVector> BoxFeasible(
    const AffineSystem& system, const RationalVector& lower,
    const RationalVector& upper, const std::vector<Inequality>& extra) {
  const std::size_t nv = system.num_vars;
  if (lower.size() != nv || upper.size() != nv) {
    throw std::invalid_argument("box bounds have wrong dimension");
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (lower[v] > upper[v]) throw std::invalid_argument("empty box bound");
  }
  for (const Inequality& in : extra) {
    if (in.coefficients.size() != nv) {
      throw std::invalid_argument("inequality has wrong dimension");
    }
  }

  const Echelon e = Reduce(system);
  if (!e.consistent) return std::nullopt;

  // Every variable as an affine expression constant + sum coeff * z_f over the
  // free variables z.
  std::vector<bool> is_pivot(nv, false);
  for (std::size_t col : e.pivot_columns) is_pivot[col] = true;
  std::vector<std::size_t> free_vars;
  std::vector<std::size_t> free_index(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    if (!is_pivot[v]) {
      free_index[v] = free_vars.size();
      free_vars.push_back(v);
    }
  }
  const std::size_t d = free_vars.size();
  std::vector<RationalVector> expr_coeff(nv, RationalVector(d));
  RationalVector expr_const(nv);
  for (std::size_t f = 0; f < d; ++f) expr_coeff[free_vars[f]][f] = 1;
  for (std::size_t r = 0; r < e.rank(); ++r) {
    const std::size_t p = e.pivot_columns[r];
    expr_const[p] = e.rows[r][nv];
    for (std::size_t f = 0; f < d; ++f) {
      expr_coeff[p][f] = -e.rows[r][free_vars[f]];
    }
  }

  // Stage d holds constraints over z_0..z_{d-1}.
  std::vector<Constraint> cs;
  for (std::size_t v = 0; v < nv; ++v) {
    Constraint up{expr_coeff[v], upper[v] - expr_const[v]};
    if (!Push(cs, std::move(up))) return std::nullopt;
    Constraint lo{expr_coeff[v], expr_const[v] - lower[v]};
    for (Rational& a : lo.coefficients) a = -a;
    if (!Push(cs, std::move(lo))) return std::nullopt;
  }
  for (const Inequality& in : extra) {
    Constraint c{RationalVector(d), in.bound};
    for (std::size_t v = 0; v < nv; ++v) {
      if (IsZero(in.coefficients[v])) continue;
      c.bound -= in.coefficients[v] * expr_const[v];
      for (std::size_t f = 0; f < d; ++f) {
        c.coefficients[f] += in.coefficients[v] * expr_coeff[v][f];
      }
    }
    if (!Push(cs, std::move(c))) return std::nullopt;
  }
  Deduplicate(cs);

  // stages[v] is the constraint set before eliminating z_v; it only involves
  // z_0..z_v.
  std::vector<std::vector<Constraint>> stages(d);
  for (std::size_t v = d; v-- > 0;) {
    stages[v] = cs;
    std::vector<Constraint> pos, neg, next;
    for (Constraint& c : cs) {
      const int s = sgn(c.coefficients[v]);
      if (s > 0) {
        pos.push_back(std::move(c));
      } else if (s < 0) {
        neg.push_back(std::move(c));
      } else {
        next.push_back(std::move(c));
      }
    }
    // Normalization makes the coefficient of z_v exactly +1 or -1 whenever it
    // is the last nonzero one, which holds here since z_{v+1..} are gone.
    for (const Constraint& p : pos) {
      for (const Constraint& q : neg) {
        Constraint sum{RationalVector(d), p.bound + q.bound};
        for (std::size_t f = 0; f < v; ++f) {
          sum.coefficients[f] = p.coefficients[f] + q.coefficients[f];
        }
        if (!Push(next, std::move(sum))) return std::nullopt;
      }
    }
    Deduplicate(next);
    cs = std::move(next);
  }

  RationalVector z(d);
  for (std::size_t v = 0; v < d; ++v) {
    std::optional<Rational> lo, hi;
    for (const Constraint& c : stages[v]) {
      const int s = sgn(c.coefficients[v]);
      if (s == 0) continue;
      Rational rest = c.bound;
      for (std::size_t f = 0; f < v; ++f) {
        if (!IsZero(c.coefficients[f])) rest -= c.coefficients[f] * z[f];
      }
      // coefficient is +1 or -1 after normalization
      if (s > 0) {
        if (!hi || rest < *hi) hi = rest;
      } else {
        rest = -rest;
        if (!lo || rest > *lo) lo = rest;
      }
    }
    if (!lo || !hi || *lo > *hi) {
      throw TheoremViolation("Fourier-Motzkin back-substitution failed");
    }
    z[v] = (*lo + *hi) / 2;
  }

  RationalVector y(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    Rational value = expr_const[v];
    for (std::size_t f = 0; f < d; ++f) {
      if (!IsZero(expr_coeff[v][f])) value += expr_coeff[v][f] * z[f];
    }
    y[v] = std::move(value);
  }
  return y;
}

}  // namespace consensus
