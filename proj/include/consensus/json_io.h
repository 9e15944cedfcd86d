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


#ifndef CONSENSUS_JSON_IO_H_
#define CONSENSUS_JSON_IO_H_

#include <string_view>

#include "json.hpp"

#include "consensus/agreeable.h"
#include "consensus/monotonic.h"
#include "consensus/oracles.h"
#include "consensus/stats.h"
#include "consensus/types.h"

namespace consensus {

using Json = nlohmann::json;

// Malformed documents raise std::invalid_argument.

Json RationalVectorToJson(const RationalVector& v);
RationalVector RationalVectorFromJson(const Json& j);
Json RationalMatrixToJson(const RationalMatrix& m);
RationalMatrix RationalMatrixFromJson(const Json& j);

// {"n", "m", "utilities": [["p/q", ...], ...], "allow_negative"}
Json InstanceToJson(const Instance& instance);
Instance InstanceFromJson(const Json& j);

// {"k", "fractions": [["p/q", ...], ...]} with one row per item.
Json SplitToJson(const FractionalSplit& split);
FractionalSplit SplitFromJson(const Json& j);

// "1/3,1/3,1/3".
Ratios ParseRatios(std::string_view text);
Json RatiosToJson(const Ratios& ratios);

// Oracle specs carry a "kind": "additive" (an Instance document),
// "symmetric-threshold" (Instance fields plus "caps"), "coverage"
// ("m", "agents": [{"weights", "covers"}]) or "table" ("m", "values").
Json OracleSpecToJson(const OracleSpec& spec);
OracleSpec OracleSpecFromJson(const Json& j);

Json ItemSetToJson(const ItemSet& set);
ItemSet ItemSetFromJson(const Json& j, std::size_t num_items);

Json SplitReportToJson(const SplitReport& report);
Json RandomMinCutsReportToJson(const RandomMinCutsReport& report);
Json GreedySuccessReportToJson(const GreedySuccessReport& report);

}  // namespace consensus

#endif  // CONSENSUS_JSON_IO_H_
