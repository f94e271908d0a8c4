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

#include "core/resources.hpp"

#include <array>
#include <string>
#include <utility>

#include "core/errors.hpp"

namespace qlan {

namespace {

constexpr std::array<std::pair<MsgType, std::string_view>, 8> kMsgNames{{
    {MsgType::B0Designation, "B0_DESIGNATION"},
    {MsgType::XPlus, "X_PLUS"},
    {MsgType::XMinus, "X_MINUS"},
    {MsgType::YPlus, "Y_PLUS"},
    {MsgType::YMinus, "Y_MINUS"},
    {MsgType::ZPlus, "Z_PLUS"},
    {MsgType::ZMinus, "Z_MINUS"},
    {MsgType::Ack, "ACK"},
}};

VertexSet set_minus(const VertexSet& from, const VertexSet& remove) {
  VertexSet out;
  for (VertexId v : from) {
    if (!remove.contains(v)) {
      out.insert(v);
    }
  }
  return out;
}

}  // namespace

std::string_view msg_type_name(MsgType m) {
  for (const auto& [type, name] : kMsgNames) {
    if (type == m) {
      return name;
    }
  }
  return "UNKNOWN";
}

std::optional<MsgType> msg_type_from_name(std::string_view name) {
  for (const auto& [type, n] : kMsgNames) {
    if (n == name) {
      return type;
    }
  }
  return std::nullopt;
}

MsgType outcome_message(PauliAxis axis, Outcome m) {
  const bool plus = m == Outcome::Plus;
  switch (axis) {
    case PauliAxis::X:
      return plus ? MsgType::XPlus : MsgType::XMinus;
    case PauliAxis::Y:
      return plus ? MsgType::YPlus : MsgType::YMinus;
    case PauliAxis::Z:
      return plus ? MsgType::ZPlus : MsgType::ZMinus;
  }
  return MsgType::ZPlus;
}

VertexId lowest_index_neighbor(const Graph& g, VertexId measured) {
  const VertexSet& hood = g.neighbors(measured);
  if (hood.empty()) {
    throw DomainError("vertex " + g.name(measured) + " has no neighbour to act as b0");
  }
  return *hood.begin();
}

VertexId choose_b0(const Graph& g, VertexId a, const BasisEntry& entry, const B0Policy& policy) {
  if (entry.b0) {
    if (!g.contains(*entry.b0) || !g.neighbors(a).contains(*entry.b0)) {
      throw DomainError("b0 override #" + std::to_string(entry.b0->index) +
                        " is not a neighbour of " + g.name(a));
    }
    return *entry.b0;
  }
  return policy(g, a);
}

PureState build_graph_state(const Graph& g) {
  if (g.empty()) {
    throw DomainError("cannot build the graph state of an empty graph");
  }
  const std::vector<VertexId> labels = g.vertices();
  PureState s = PureState::plus(labels);
  for (const auto& [a, b] : g.edges()) {
    s.apply_cz(a, b);
  }
  return s;
}

SingleQubitGate correction_gate(MsgType m, bool is_b0) {
  switch (m) {
    case MsgType::ZPlus:
      return SingleQubitGate::identity();
    case MsgType::ZMinus:
      return SingleQubitGate::pauli_z();
    case MsgType::YPlus:
      return SingleQubitGate::sqrt_minus_i_z().adjoint();
    case MsgType::YMinus:
      return SingleQubitGate::sqrt_plus_i_z().adjoint();
    case MsgType::XPlus:
      return is_b0 ? SingleQubitGate::sqrt_plus_i_y().adjoint() : SingleQubitGate::pauli_z();
    case MsgType::XMinus:
      return is_b0 ? SingleQubitGate::sqrt_minus_i_y().adjoint() : SingleQubitGate::pauli_z();
    case MsgType::B0Designation:
    case MsgType::Ack:
      break;
  }
  throw DomainError(std::string(msg_type_name(m)) + " carries no correction");
}

CorrectionTargets correction_targets(const Graph& g_before, VertexId a, PauliAxis axis,
                                     Outcome outcome, std::optional<VertexId> b0) {
  const VertexSet& n_a = g_before.neighbors(a);
  if (axis != PauliAxis::X) {
    return {n_a, std::nullopt};
  }
  if (n_a.empty()) {
    throw DomainError("x-measurement of isolated vertex " + g_before.name(a));
  }
  if (!b0 || !n_a.contains(*b0)) {
    throw DomainError("x-measurement of " + g_before.name(a) + " needs b0 in its neighbourhood");
  }
  const VertexSet& n_b0 = g_before.neighbors(*b0);
  VertexSet dest;
  if (outcome == Outcome::Plus) {
    VertexSet excluded = n_b0;
    excluded.insert(*b0);
    dest = set_minus(n_a, excluded);
  } else {
    VertexSet excluded = n_a;
    excluded.insert(a);
    dest = set_minus(n_b0, excluded);
  }
  dest.insert(*b0);
  return {std::move(dest), b0};
}

Graph apply_transform(const Graph& g, VertexId a, PauliAxis axis, std::optional<VertexId> b0) {
  switch (axis) {
    case PauliAxis::Z:
      return transform_z(g, a);
    case PauliAxis::Y:
      return transform_y(g, a);
    case PauliAxis::X:
      if (!b0) {
        throw DomainError("x transform needs a support vertex");
      }
      return transform_x(g, a, *b0);
  }
  return g;
}

Graph predicted_graph(const Graph& g0, const BasesArray& bases, std::span<const Outcome> outcomes,
                      const B0Policy& policy) {
  const std::vector<VertexId> order = g0.orchestrator_vertices();
  if (bases.size() > order.size()) {
    throw DomainError("bases array has " + std::to_string(bases.size()) + " entries but n_o=" +
                      std::to_string(order.size()));
  }
  if (outcomes.size() != bases.size()) {
    throw DomainError("outcome vector length must equal bases length");
  }
  Graph g = g0;
  for (std::size_t j = 0; j < bases.size(); ++j) {
    const VertexId a = order[j];
    std::optional<VertexId> b0;
    if (bases[j].axis == PauliAxis::X) {
      if (g.neighbors(a).empty()) {
        throw DomainError("measurement " + std::to_string(j) + ": x-measurement of isolated vertex " +
                          g.name(a));
      }
      b0 = choose_b0(g, a, bases[j], policy);
    }
    g = apply_transform(g, a, bases[j].axis, b0);
  }
  return g;
}

}  // namespace qlan
