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

#ifndef CONSENSUS_RATIONAL_H_
#define CONSENSUS_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace consensus {

// Exact arbitrary-precision fraction. GMP keeps every value produced by
// arithmetic in lowest terms with a positive denominator; values built by
// ParseRational are canonicalized before they are returned.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// Parses "p", "-p" or "p/q" (q != 0). Throws std::invalid_argument on
// malformed text.
Rational ParseRational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string FormatRational(const Rational& value);

// num/den in lowest terms. Prefer this over the two-argument mpq_class
// constructor, which leaves the fraction uncanonicalized.
Rational MakeRational(long num, unsigned long den);

// Nearest double; only used for reporting and for the Table 1 residuals.
inline double ToDouble(const Rational& value) { return value.get_d(); }

inline bool IsZero(const Rational& value) { return sgn(value) == 0; }

}  // namespace consensus

#endif  // CONSENSUS_RATIONAL_H_
