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

#include "core/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "core/errors.hpp"

namespace qlan {

namespace {

std::string describe(VertexId a) { return "vertex #" + std::to_string(a.index); }

bool is_dot_identifier(const std::string& s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string dot_id(const std::string& s) {
  if (is_dot_identifier(s)) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace

const Graph::Slot& Graph::slot(VertexId a) const {
  if (a.index >= slots_.size() || !slots_[a.index].alive) {
    throw DomainError("unknown " + describe(a));
  }
  return slots_[a.index];
}

Graph::Slot& Graph::slot(VertexId a) {
  return const_cast<Slot&>(static_cast<const Graph&>(*this).slot(a));
}

VertexId Graph::add_vertex(Role role, std::string name) {
  std::uint32_t& counter = role == Role::Orchestrator ? orchestrators_added_ : clients_added_;
  ++counter;
  if (name.empty()) {
    name = (role == Role::Orchestrator ? "o" : "c") + std::to_string(counter);
  }
  VertexId id{static_cast<std::uint32_t>(slots_.size())};
  slots_.push_back(Slot{true, role, std::move(name), {}});
  ++live_;
  return id;
}

void Graph::add_edge(VertexId a, VertexId b) {
  if (a == b) {
    throw DomainError("self-loop on " + describe(a));
  }
  slot(a).adjacent.insert(b);
  slot(b).adjacent.insert(a);
}

void Graph::toggle_edge(VertexId a, VertexId b) {
  if (a == b) {
    throw DomainError("self-loop on " + describe(a));
  }
  Slot& sa = slot(a);
  Slot& sb = slot(b);
  if (sa.adjacent.erase(b) != 0) {
    sb.adjacent.erase(a);
  } else {
    sa.adjacent.insert(b);
    sb.adjacent.insert(a);
  }
}

void Graph::remove_vertex(VertexId a) {
  Slot& sa = slot(a);
  for (VertexId b : sa.adjacent) {
    slots_[b.index].adjacent.erase(a);
  }
  sa.adjacent.clear();
  sa.alive = false;
  --live_;
}

bool Graph::contains(VertexId a) const noexcept {
  return a.index < slots_.size() && slots_[a.index].alive;
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  slot(b);
  return slot(a).adjacent.contains(b);
}

const VertexSet& Graph::neighbors(VertexId a) const { return slot(a).adjacent; }

Role Graph::role(VertexId a) const { return slot(a).role; }

const std::string& Graph::name(VertexId a) const { return slot(a).name; }

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(live_);
  for (std::uint32_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i].alive) {
      out.push_back(VertexId{i});
    }
  }
  return out;
}

std::vector<VertexId> Graph::orchestrator_vertices() const {
  std::vector<VertexId> out;
  for (std::uint32_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i].alive && slots_[i].role == Role::Orchestrator) {
      out.push_back(VertexId{i});
    }
  }
  return out;
}

std::vector<VertexId> Graph::client_vertices() const {
  std::vector<VertexId> out;
  for (std::uint32_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i].alive && slots_[i].role == Role::Client) {
      out.push_back(VertexId{i});
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::uint32_t i = 0; i < slots_.size(); ++i) {
    if (!slots_[i].alive) {
      continue;
    }
    for (VertexId b : slots_[i].adjacent) {
      if (b.index > i) {
        out.emplace_back(VertexId{i}, b);
      }
    }
  }
  return out;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t degree_sum = 0;
  for (const Slot& s : slots_) {
    degree_sum += s.alive ? s.adjacent.size() : 0;
  }
  return degree_sum / 2;
}

bool operator==(const Graph& lhs, const Graph& rhs) {
  const std::size_t bound = std::max(lhs.slots_.size(), rhs.slots_.size());
  for (std::size_t i = 0; i < bound; ++i) {
    const bool l = i < lhs.slots_.size() && lhs.slots_[i].alive;
    const bool r = i < rhs.slots_.size() && rhs.slots_[i].alive;
    if (l != r) {
      return false;
    }
    if (!l) {
      continue;
    }
    const auto& ls = lhs.slots_[i];
    const auto& rs = rhs.slots_[i];
    if (ls.role != rs.role || ls.name != rs.name || ls.adjacent != rs.adjacent) {
      return false;
    }
  }
  return true;
}

VertexSet neighborhood(const Graph& g, VertexId a) { return g.neighbors(a); }

Graph local_complement(Graph g, VertexId a) {
  const std::vector<VertexId> hood(g.neighbors(a).begin(), g.neighbors(a).end());
  for (std::size_t i = 0; i < hood.size(); ++i) {
    for (std::size_t j = i + 1; j < hood.size(); ++j) {
      g.toggle_edge(hood[i], hood[j]);
    }
  }
  return g;
}

Graph delete_vertex(Graph g, VertexId a) {
  g.remove_vertex(a);
  return g;
}

Graph transform_z(const Graph& g, VertexId a) { return delete_vertex(g, a); }

Graph transform_y(const Graph& g, VertexId a) {
  return delete_vertex(local_complement(g, a), a);
}

Graph transform_x(const Graph& g, VertexId a, VertexId b0) {
  if (!g.neighbors(a).contains(b0)) {
    throw DomainError("support vertex " + describe(b0) + " is not a neighbour of measured " +
                      describe(a));
  }
  Graph h = local_complement(g, b0);
  h = delete_vertex(local_complement(std::move(h), a), a);
  return local_complement(std::move(h), b0);
}

Graph linear_chain(int clients) {
  if (clients < 2) {
    throw DomainError("linear chain needs at least 2 clients, got " + std::to_string(clients));
  }
  Graph g;
  VertexId prev = g.add_vertex(Role::Client);
  for (int c = 1; c < clients; ++c) {
    VertexId o = g.add_vertex(Role::Orchestrator);
    g.add_edge(prev, o);
    prev = g.add_vertex(Role::Client);
    g.add_edge(o, prev);
  }
  return g;
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v : g.vertices()) {
    const bool orch = g.role(v) == Role::Orchestrator;
    out << "  " << dot_id(g.name(v)) << " [shape=" << (orch ? "box" : "circle")
        << ", role=" << (orch ? "orchestrator" : "client") << ", id=" << v.index << "];\n";
  }
  for (const auto& [a, b] : g.edges()) {
    out << "  " << dot_id(g.name(a)) << " -- " << dot_id(g.name(b)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace qlan
