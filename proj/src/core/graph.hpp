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

// Graph calculus for the associated graph of a QLAN graph state: the
// orchestrator/client vertex partition, local complementation, vertex
// deletion and the three Pauli-measurement transforms.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qlan {

/// Stable vertex label. Ids are dense indices into the graph's slot table and
/// are never reused after a vertex is deleted.
struct VertexId {
  std::uint32_t index = 0;

  auto operator<=>(const VertexId&) const = default;
};

enum class Role : std::uint8_t { Orchestrator, Client };

using VertexSet = std::set<VertexId>;
using Edge = std::pair<VertexId, VertexId>;  // always (smaller, larger)

class Graph {
 public:
  Graph() = default;

  /// Appends a vertex. An empty name becomes "o<k>" / "c<k>" where k counts
  /// vertices of the same role added so far.
  VertexId add_vertex(Role role, std::string name = {});
  void add_edge(VertexId a, VertexId b);
  void toggle_edge(VertexId a, VertexId b);
  void remove_vertex(VertexId a);

  bool contains(VertexId a) const noexcept;
  bool has_edge(VertexId a, VertexId b) const;
  const VertexSet& neighbors(VertexId a) const;
  Role role(VertexId a) const;
  const std::string& name(VertexId a) const;

  /// Live vertices in increasing id order.
  std::vector<VertexId> vertices() const;
  std::vector<VertexId> orchestrator_vertices() const;
  std::vector<VertexId> client_vertices() const;
  std::vector<Edge> edges() const;

  std::size_t vertex_count() const noexcept { return live_; }
  std::size_t edge_count() const noexcept;
  bool empty() const noexcept { return live_ == 0; }

  /// Upper bound (exclusive) on ids ever issued by this graph.
  std::uint32_t id_bound() const noexcept { return static_cast<std::uint32_t>(slots_.size()); }

  /// Live vertices, roles, names and edges all equal.
  friend bool operator==(const Graph& lhs, const Graph& rhs);

 private:
  struct Slot {
    bool alive = false;
    Role role = Role::Client;
    std::string name;
    VertexSet adjacent;
  };

  const Slot& slot(VertexId a) const;
  Slot& slot(VertexId a);

  std::vector<Slot> slots_;
  std::size_t live_ = 0;
  std::uint32_t orchestrators_added_ = 0;
  std::uint32_t clients_added_ = 0;
};

VertexSet neighborhood(const Graph& g, VertexId a);

/// Complements the edge set inside the neighbourhood of `a`.
Graph local_complement(Graph g, VertexId a);
Graph delete_vertex(Graph g, VertexId a);

/// Z measurement: G - a.
Graph transform_z(const Graph& g, VertexId a);
/// Y measurement: tau_a(G) - a.
Graph transform_y(const Graph& g, VertexId a);
/// X measurement with support vertex b0 in N_a: tau_b0(tau_a(tau_b0(G)) - a).
Graph transform_x(const Graph& g, VertexId a, VertexId b0);

/// Chain c1 - o1 - c2 - ... - o_{k-1} - c_k with ids assigned in that order.
Graph linear_chain(int clients);

/// Graphviz rendering; vertices sorted by id, orchestrators drawn as boxes.
std::string to_dot(const Graph& g);

}  // namespace qlan

template <>
struct std::hash<qlan::VertexId> {
  std::size_t operator()(const qlan::VertexId& v) const noexcept { return v.index; }
};
