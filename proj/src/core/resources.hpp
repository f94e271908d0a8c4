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

// Graph-state preparation, the correction-gate dictionary and the classical
// prediction of the post-measurement topology.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "core/engine.hpp"
#include "core/graph.hpp"

namespace qlan {

enum class MsgType : std::uint8_t {
  B0Designation,
  XPlus,
  XMinus,
  YPlus,
  YMinus,
  ZPlus,
  ZMinus,
  Ack,
};

/// Wire name, e.g. "B0_DESIGNATION", "X_PLUS", "ACK".
std::string_view msg_type_name(MsgType m);
std::optional<MsgType> msg_type_from_name(std::string_view name);

/// The outcome message announcing measurement result `m` along `axis`.
MsgType outcome_message(PauliAxis axis, Outcome m);

struct BasisEntry {
  PauliAxis axis = PauliAxis::Z;
  std::optional<VertexId> b0;  // overrides the b0 policy for this measurement
};

/// One entry per orchestrator vertex, applied in increasing vertex-id order.
using BasesArray = std::vector<BasisEntry>;

/// Picks the support vertex for an X measurement of `measured` in `current`.
using B0Policy = std::function<VertexId(const Graph& current, VertexId measured)>;

/// Lowest-id neighbour. Throws DomainError when the neighbourhood is empty.
VertexId lowest_index_neighbor(const Graph& g, VertexId measured);

/// Resolves the support vertex for measurement `entry` of `a`: the override if
/// present (must lie in N_a), otherwise `policy`.
VertexId choose_b0(const Graph& g, VertexId a, const BasisEntry& entry, const B0Policy& policy);

/// prod_{edges} CZ |+>^n, labels in increasing vertex-id order.
PureState build_graph_state(const Graph& g);

/// Adjoint of the byproduct unitary carried by an outcome message.
SingleQubitGate correction_gate(MsgType m, bool is_b0);

struct CorrectionTargets {
  VertexSet dest_sample;
  std::optional<VertexId> b0_designee;
};

/// Vertices that must apply a correction after measuring `a`. All
/// neighbourhoods are read from the pre-measurement graph.
CorrectionTargets correction_targets(const Graph& g_before, VertexId a, PauliAxis axis,
                                     Outcome outcome, std::optional<VertexId> b0);

/// Applies the graph transform matching `axis` (b0 is only used for X).
Graph apply_transform(const Graph& g, VertexId a, PauliAxis axis, std::optional<VertexId> b0);

/// Folds the measurement transforms over the first bases.size() orchestrator
/// vertices of g0. `outcomes` must have the same length as `bases`; the result
/// does not depend on their values.
Graph predicted_graph(const Graph& g0, const BasesArray& bases, std::span<const Outcome> outcomes,
                      const B0Policy& policy = lowest_index_neighbor);

}  // namespace qlan
