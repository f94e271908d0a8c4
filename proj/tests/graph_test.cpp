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

#include <random>

#include "core/errors.hpp"
#include "gtest/gtest.h"
#include "support/oracle.hpp"
#include "support/test_util.hpp"

using namespace qlan;
using qlan::testing::edge_ids;
using qlan::testing::from_adj;
using qlan::testing::to_adj;

namespace {

using EdgeIds = std::set<std::pair<std::uint32_t, std::uint32_t>>;

Graph path3() {
  Graph g;
  auto a = g.add_vertex(Role::Client);
  auto b = g.add_vertex(Role::Orchestrator);
  auto c = g.add_vertex(Role::Client);
  g.add_edge(a, b);
  g.add_edge(b, c);
  return g;
}

Graph triangle() {
  Graph g;
  for (int i = 0; i < 3; ++i) g.add_vertex(Role::Client);
  g.add_edge({0}, {1});
  g.add_edge({1}, {2});
  g.add_edge({0}, {2});
  return g;
}

Graph random_graph(std::size_t n, std::mt19937_64& rng, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(coin(rng) ? Role::Orchestrator : Role::Client);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (coin(rng)) g.add_edge({i}, {j});
    }
  }
  return g;
}

void expect_partition_ok(const Graph& g) {
  const auto o = g.orchestrator_vertices();
  const auto c = g.client_vertices();
  EXPECT_EQ(o.size() + c.size(), g.vertex_count());
  std::set<VertexId> all(o.begin(), o.end());
  all.insert(c.begin(), c.end());
  EXPECT_EQ(all.size(), g.vertex_count());
  for (VertexId v : g.vertices()) {
    EXPECT_FALSE(g.neighbors(v).contains(v));
  }
}

}  // namespace

TEST(graph, neighborhood) {
  const Graph p = path3();
  EXPECT_EQ(neighborhood(p, {1}), (VertexSet{{0}, {2}}));

  Graph iso;
  auto v = iso.add_vertex(Role::Client);
  EXPECT_TRUE(neighborhood(iso, v).empty());

  const Graph t = triangle();
  EXPECT_EQ(neighborhood(t, {2}), (VertexSet{{0}, {1}}));

  EXPECT_THROW(neighborhood(p, {7}), DomainError);
}

TEST(graph, add_edge_rejects_self_loop_and_unknown_vertex) {
  Graph g = path3();
  EXPECT_THROW(g.add_edge({0}, {0}), DomainError);
  EXPECT_THROW(g.add_edge({0}, {9}), DomainError);
}

TEST(graph, local_complement_examples) {
  const Graph lc = local_complement(path3(), {1});
  EXPECT_EQ(edge_ids(lc), (EdgeIds{{0, 1}, {0, 2}, {1, 2}}));

  // |N_a| <= 1: nothing to complement
  EXPECT_EQ(local_complement(path3(), {0}), path3());
  EXPECT_THROW(local_complement(path3(), {5}), DomainError);
}

TEST(graph, local_complement_is_an_involution) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(6, rng);
    for (VertexId a : g.vertices()) {
      EXPECT_EQ(local_complement(local_complement(g, a), a), g);
    }
  }
}

TEST(graph, delete_vertex_examples) {
  const Graph p = delete_vertex(path3(), {1});
  EXPECT_EQ(p.vertex_count(), 2u);
  EXPECT_EQ(p.edge_count(), 0u);
  EXPECT_TRUE(p.orchestrator_vertices().empty());

  Graph single;
  auto v = single.add_vertex(Role::Client);
  EXPECT_TRUE(delete_vertex(single, v).empty());

  EXPECT_EQ(edge_ids(delete_vertex(triangle(), {0})), (EdgeIds{{1, 2}}));
  EXPECT_THROW(delete_vertex(path3(), {3}), DomainError);
}

TEST(graph, deleted_ids_are_retired) {
  Graph g = delete_vertex(path3(), {1});
  EXPECT_FALSE(g.contains({1}));
  const VertexId fresh = g.add_vertex(Role::Client);
  EXPECT_EQ(fresh.index, 3u);
  EXPECT_THROW(g.name({1}), DomainError);
}

TEST(graph, transform_z_examples) {
  const Graph chain2 = linear_chain(2);
  const Graph z = transform_z(chain2, {1});
  EXPECT_EQ(z.vertex_count(), 2u);
  EXPECT_EQ(z.edge_count(), 0u);

  // c1-o1-c2-o2-c3-o3-c4, measure o2
  const Graph z4 = transform_z(linear_chain(4), {3});
  EXPECT_EQ(edge_ids(z4), (EdgeIds{{0, 1}, {1, 2}, {4, 5}, {5, 6}}));

  Graph iso = path3();
  auto extra = iso.add_vertex(Role::Orchestrator);
  EXPECT_EQ(transform_z(iso, extra), path3());
}

TEST(graph, transform_y_examples) {
  EXPECT_EQ(edge_ids(transform_y(linear_chain(2), {1})), (EdgeIds{{0, 2}}));

  Graph star;
  auto center = star.add_vertex(Role::Orchestrator);
  for (int i = 0; i < 4; ++i) star.add_edge(center, star.add_vertex(Role::Client));
  const Graph k4 = transform_y(star, center);
  EXPECT_EQ(k4.vertex_count(), 4u);
  EXPECT_EQ(k4.edge_count(), 6u);

  Graph two;
  auto a = two.add_vertex(Role::Client);
  auto b = two.add_vertex(Role::Client);
  two.add_edge(a, b);
  const Graph left = transform_y(two, a);
  EXPECT_EQ(left.vertex_count(), 1u);
  EXPECT_EQ(left.edge_count(), 0u);
}

TEST(graph, transform_x_path_middle) {
  // path a-b-c, measure b with b0 = a
  EXPECT_EQ(edge_ids(transform_x(path3(), {1}, {0})), (EdgeIds{{0, 2}}));
}

TEST(graph, transform_x_chain_with_shared_support) {
  // c1-o1-c2-o2-c3 (ids 0..4), measure o1 with b0 = c2. Expected edges
  // frozen from the adjacency-matrix oracle (and confirmed on the state
  // vector in resources_test): c1-c2, c1-o2, o2-c3.
  Graph g = linear_chain(3);
  const EdgeIds expected{{0, 2}, {0, 3}, {3, 4}};
  EXPECT_EQ(oracle::measure_x(to_adj(g), 1, 2).edge_set(), expected);
  EXPECT_EQ(edge_ids(transform_x(g, {1}, {2})), expected);
}

TEST(graph, transform_x_single_neighbour) {
  // N_a = {b0} and b0 has no other neighbour: only a disappears.
  Graph edge;
  auto a = edge.add_vertex(Role::Orchestrator);
  auto b0 = edge.add_vertex(Role::Client);
  edge.add_edge(a, b0);
  const Graph one = transform_x(edge, a, b0);
  EXPECT_EQ(one.vertex_count(), 1u);
  EXPECT_EQ(one.edge_count(), 0u);

  // Leaf a of a-b-c with b0 = b: b's other edge is cut as well, so the
  // remaining vertices are isolated (oracle value, not "rest unchanged").
  const EdgeIds expected{};
  EXPECT_EQ(oracle::measure_x(to_adj(path3()), 0, 1).edge_set(), expected);
  const Graph leaf = transform_x(path3(), {0}, {1});
  EXPECT_EQ(leaf.vertex_count(), 2u);
  EXPECT_EQ(edge_ids(leaf), expected);
}

TEST(graph, transform_x_rejects_bad_support) {
  EXPECT_THROW(transform_x(path3(), {1}, {1}), DomainError);
  Graph iso;
  auto a = iso.add_vertex(Role::Orchestrator);
  auto b = iso.add_vertex(Role::Client);
  EXPECT_THROW(transform_x(iso, a, b), DomainError);
  EXPECT_THROW(transform_x(path3(), {0}, {2}), DomainError);
}

TEST(graph, transforms_match_oracle_and_keep_partition) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(6, rng, 0.45);
    const auto adj = to_adj(g);
    for (VertexId a : g.vertices()) {
      const Graph z = transform_z(g, a);
      const Graph y = transform_y(g, a);
      EXPECT_EQ(edge_ids(z), oracle::measure_z(adj, a.index).edge_set());
      EXPECT_EQ(edge_ids(y), oracle::measure_y(adj, a.index).edge_set());
      expect_partition_ok(z);
      expect_partition_ok(y);
      EXPECT_FALSE(z.contains(a));
      for (VertexId b0 : g.neighbors(a)) {
        const Graph x = transform_x(g, a, b0);
        EXPECT_EQ(edge_ids(x), oracle::measure_x(adj, a.index, b0.index).edge_set());
        expect_partition_ok(x);
        EXPECT_FALSE(x.contains(a));

        // Edges outside N_a, N_b0, a and b0 are untouched.
        VertexSet touched = g.neighbors(a);
        touched.insert(g.neighbors(b0).begin(), g.neighbors(b0).end());
        touched.insert(a);
        touched.insert(b0);
        for (VertexId u : x.vertices()) {
          for (VertexId v : x.vertices()) {
            if (u < v && !touched.contains(u) && !touched.contains(v)) {
              EXPECT_EQ(x.has_edge(u, v), g.has_edge(u, v));
            }
          }
        }
      }
    }
  }
}

TEST(graph, linear_chain_layout) {
  const Graph g2 = linear_chain(2);
  EXPECT_EQ(g2.vertex_count(), 3u);
  EXPECT_EQ(g2.orchestrator_vertices().size(), 1u);
  EXPECT_EQ(g2.name({0}), "c1");
  EXPECT_EQ(g2.name({1}), "o1");
  EXPECT_EQ(g2.name({2}), "c2");

  const Graph g4 = linear_chain(4);
  EXPECT_EQ(g4.vertex_count(), 7u);
  EXPECT_EQ(g4.orchestrator_vertices().size(), 3u);
  EXPECT_EQ(g4.client_vertices().size(), 4u);
  EXPECT_EQ(g4.edge_count(), 6u);
  for (std::uint32_t i = 0; i + 1 < 7; ++i) EXPECT_TRUE(g4.has_edge({i}, {i + 1}));
  EXPECT_EQ(g4.name({5}), "o3");
  EXPECT_EQ(g4.name({6}), "c4");

  EXPECT_THROW(linear_chain(1), DomainError);
}

TEST(graph, to_dot) {
  Graph empty;
  EXPECT_EQ(to_dot(empty), "graph G {\n}\n");

  Graph pair;
  auto a = pair.add_vertex(Role::Client);
  auto b = pair.add_vertex(Role::Client);
  pair.add_edge(a, b);
  EXPECT_NE(to_dot(pair).find("  c1 -- c2;\n"), std::string::npos);

  const auto dot = qlan::testing::read_dot(to_dot(linear_chain(2)));
  EXPECT_EQ(dot.shape_by_node.size(), 3u);
  EXPECT_EQ(dot.edges.size(), 2u);
  EXPECT_EQ(dot.shape_by_node.at("o1"), "box");
  EXPECT_EQ(dot.shape_by_node.at("c1"), "circle");
}

TEST(graph, equality_ignores_retired_slots_but_not_names) {
  Graph a = linear_chain(2);
  Graph b = from_adj(to_adj(a), {1});
  EXPECT_EQ(a, b);
  b.toggle_edge({0}, {2});
  EXPECT_FALSE(a == b);
}
