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

// Test-only reference implementations. Nothing here calls into the graph,
// engine or resources modules: graphs are adjacency matrices, graph states
// come from the closed-form sign rule, and Pauli projectors are built from
// (I +/- sigma) / 2 directly.

#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace qlan::oracle {

using cd = std::complex<double>;

/// Undirected simple graph on arbitrary integer labels, stored as a dense
/// adjacency matrix over `labels` (sorted ascending).
struct AdjGraph {
  std::vector<std::uint32_t> labels;
  std::vector<std::vector<bool>> adj;

  std::size_t size() const { return labels.size(); }

  std::size_t pos(std::uint32_t label) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == label) return i;
    }
    return labels.size();
  }

  bool edge(std::uint32_t a, std::uint32_t b) const { return adj[pos(a)][pos(b)]; }

  std::set<std::uint32_t> hood(std::uint32_t a) const {
    std::set<std::uint32_t> out;
    const std::size_t i = pos(a);
    for (std::size_t j = 0; j < size(); ++j) {
      if (adj[i][j]) out.insert(labels[j]);
    }
    return out;
  }

  std::set<std::pair<std::uint32_t, std::uint32_t>> edge_set() const {
    std::set<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = i + 1; j < size(); ++j) {
        if (adj[i][j]) out.emplace(labels[i], labels[j]);
      }
    }
    return out;
  }
};

inline AdjGraph make_graph(std::vector<std::uint32_t> labels,
                           const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  AdjGraph g;
  g.labels = std::move(labels);
  g.adj.assign(g.size(), std::vector<bool>(g.size(), false));
  for (const auto& [a, b] : edges) {
    g.adj[g.pos(a)][g.pos(b)] = true;
    g.adj[g.pos(b)][g.pos(a)] = true;
  }
  return g;
}

/// Graph on labels 0..n-1 whose edges are the set bits of `mask` over the
/// pairs (i, j), i < j, enumerated row by row.
inline AdjGraph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::uint32_t> labels(n);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::size_t bit = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    labels[i] = i;
    for (std::uint32_t j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1U) edges.emplace_back(i, j);
    }
  }
  return make_graph(labels, edges);
}

inline bool connected(const AdjGraph& g) {
  if (g.size() == 0) return true;
  std::vector<bool> seen(g.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g.adj[i][j] && !seen[j]) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  for (bool s : seen) {
    if (!s) return false;
  }
  return true;
}

inline AdjGraph local_complement(AdjGraph g, std::uint32_t a) {
  const std::size_t i = g.pos(a);
  std::vector<std::size_t> nb;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g.adj[i][j]) nb.push_back(j);
  }
  for (std::size_t x : nb) {
    for (std::size_t y : nb) {
      if (x != y) g.adj[x][y] = !g.adj[x][y];
    }
  }
  return g;
}

inline AdjGraph remove(const AdjGraph& g, std::uint32_t a) {
  const std::size_t skip = g.pos(a);
  AdjGraph h;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i != skip) {
      keep.push_back(i);
      h.labels.push_back(g.labels[i]);
    }
  }
  h.adj.assign(keep.size(), std::vector<bool>(keep.size(), false));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      h.adj[i][j] = g.adj[keep[i]][keep[j]];
    }
  }
  return h;
}

inline AdjGraph measure_z(const AdjGraph& g, std::uint32_t a) { return remove(g, a); }
inline AdjGraph measure_y(const AdjGraph& g, std::uint32_t a) { return remove(local_complement(g, a), a); }
inline AdjGraph measure_x(const AdjGraph& g, std::uint32_t a, std::uint32_t b0) {
  return local_complement(remove(local_complement(local_complement(g, b0), a), a), b0);
}

/// 2^{-n/2} (-1)^{#edges inside x}; bit i of the index is labels[i].
inline std::vector<cd> graph_state(const AdjGraph& g) {
  const std::size_t n = g.size();
  std::vector<cd> out(std::size_t{1} << n);
  const double amp = std::pow(2.0, -0.5 * static_cast<double>(n));
  for (std::size_t x = 0; x < out.size(); ++x) {
    int edges = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (g.adj[i][j] && ((x >> i) & 1U) && ((x >> j) & 1U)) ++edges;
      }
    }
    out[x] = (edges % 2 == 0) ? amp : -amp;
  }
  return out;
}

using Mat2 = std::array<cd, 4>;

inline Mat2 pauli(char axis) {
  switch (axis) {
    case 'x':
      return {0.0, 1.0, 1.0, 0.0};
    case 'y':
      return {0.0, cd(0, -1), cd(0, 1), 0.0};
    default:
      return {1.0, 0.0, 0.0, -1.0};
  }
}

/// (I + sign * sigma_axis) / 2
inline Mat2 projector(char axis, int sign) {
  const Mat2 p = pauli(axis);
  return {(1.0 + double(sign) * p[0]) / 2.0, double(sign) * p[1] / 2.0, double(sign) * p[2] / 2.0,
          (1.0 + double(sign) * p[3]) / 2.0};
}

/// Applies a 2x2 matrix on slot k (LSB = slot 0) by brute-force index loop.
inline std::vector<cd> apply(const std::vector<cd>& s, std::size_t k, const Mat2& m) {
  std::vector<cd> out(s.size(), 0.0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::size_t row = (i >> k) & 1U;
    for (std::size_t col = 0; col < 2; ++col) {
      const std::size_t j = (i & ~(std::size_t{1} << k)) | (col << k);
      out[i] += m[row * 2 + col] * s[j];
    }
  }
  return out;
}

inline double norm2(const std::vector<cd>& v) {
  double acc = 0.0;
  for (const cd& a : v) acc += std::norm(a);
  return acc;
}

inline double overlap2(const std::vector<cd>& a, const std::vector<cd>& b) {
  cd acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return std::norm(acc);
}

inline std::vector<cd> random_state(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<cd> v(std::size_t{1} << n);
  for (cd& a : v) a = cd(gauss(rng), gauss(rng));
  const double s = 1.0 / std::sqrt(norm2(v));
  for (cd& a : v) a *= s;
  return v;
}

}  // namespace qlan::oracle
