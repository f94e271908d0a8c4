// Copyright 2026 The QLAN Simulator Authors
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

// Scenario documents (JSON).
//
//   {
//     "clients": 4,                       // linear chain, or:
//     "topology": {"vertices": [0, 1, 2], "edges": [[0, 1], [1, 2]],
//                  "orchestrator_vertices": [1]},
//     "bases": ["z", "y", "x"],           // one per orchestrator vertex
//     "forced_outcomes": ["+", "-", "+"], // optional, or "+-+"
//     "b0_overrides": {"0": "c2"},        // measurement index -> vertex
//     "seed": 7,
//     "channel_delay_ns": 1000,
//     "link_delays_ns": {"c1": 250},      // optional per-client delay
//     "tolerance": 1e-9
//   }

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/netsim.hpp"

namespace qlan {

/// Parses and validates a scenario. Throws ParseError naming the field.
Scenario parse_scenario(std::string_view text);

/// "+-+" (U+2212 accepted for minus). Throws ParseError.
std::vector<Outcome> parse_outcomes(std::string_view signs, const std::string& field);

/// Canonical JSON text (explicit topology form, sorted keys, no whitespace).
std::string scenario_to_json(const Scenario& sc);

/// 64-bit FNV-1a of the canonical text, as 16 hex digits.
std::string scenario_hash(const Scenario& sc);

}  // namespace qlan
