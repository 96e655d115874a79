// Copyright 2026 The gpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Graph families used for exhaustive and randomized checking.

#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gpoly/errors.hpp"
#include "gpoly/graph.hpp"

namespace gpoly::corpus {

/// Vertex pairs of K_n in bitmask order: (1,2), (1,3), (2,3), (1,4), ...
inline std::vector<std::pair<Vertex, Vertex>> vertex_pairs(int n) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex j = 2; j <= n; ++j) {
    for (Vertex i = 1; i < j; ++i) out.emplace_back(i, j);
  }
  return out;
}

/// Simple graph on 1..n whose edges are the pairs selected by `mask`.
inline Graph labeled_graph(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  const auto pairs = vertex_pairs(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if ((mask >> k) & 1U) edges.push_back({pairs[k].first, pairs[k].second});
  }
  return Graph::with_vertices(n, std::move(edges));
}

inline std::uint64_t labeled_graph_count(int n) {
  const auto pairs = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n > 0 ? n - 1 : 0) / 2;
  if (pairs >= 63) throw SizeGuardExceeded("too many labeled graphs to enumerate");
  return std::uint64_t{1} << pairs;
}

/// All 2^(n(n-1)/2) labeled simple graphs on n vertices, in mask order.
inline std::vector<Graph> all_labeled_graphs(int n) {
  std::vector<Graph> out;
  const std::uint64_t count = labeled_graph_count(n);
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(labeled_graph(n, mask));
  return out;
}

/// Random multigraph with 1..max_vertices vertices and 0..max_edges edges;
/// loops and parallel edges occur with the endpoint distribution's odds.
template <class Rng>
Graph random_multigraph(Rng& rng, int max_vertices, int max_edges) {
  const int n = std::uniform_int_distribution<int>(1, max_vertices)(rng);
  const int m = std::uniform_int_distribution<int>(0, max_edges)(rng);
  std::uniform_int_distribution<Vertex> endpoint(1, n);
  std::vector<Edge> edges;
  for (int k = 0; k < m; ++k) edges.push_back({endpoint(rng), endpoint(rng)});
  return Graph::with_vertices(n, std::move(edges));
}

/// Tree on 1..n decoded from a Prüfer sequence of length n - 2.
inline Graph tree_from_prufer(int n, const std::vector<Vertex>& code) {
  if (n <= 0) return Graph{};
  if (n == 1) return Graph::with_vertices(1);
  std::vector<int> remaining(static_cast<std::size_t>(n) + 1, 1);
  for (Vertex a : code) ++remaining[static_cast<std::size_t>(a)];
  std::vector<Edge> edges;
  for (Vertex a : code) {
    Vertex leaf = 1;
    while (remaining[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    edges.push_back({leaf, a});
    --remaining[static_cast<std::size_t>(leaf)];
    --remaining[static_cast<std::size_t>(a)];
  }
  Vertex last_a = 0;
  for (Vertex a = 1; a <= n; ++a) {
    if (remaining[static_cast<std::size_t>(a)] != 1) continue;
    if (last_a == 0) {
      last_a = a;
    } else {
      edges.push_back({last_a, a});
      break;
    }
  }
  return Graph::with_vertices(n, std::move(edges));
}

/// All n^(n-2) labeled trees on n vertices.
inline std::vector<Graph> all_labeled_trees(int n) {
  if (n <= 0) return {Graph{}};
  if (n <= 2) return {tree_from_prufer(n, {})};
  std::vector<Graph> out;
  std::vector<Vertex> code(static_cast<std::size_t>(n - 2), 1);
  for (;;) {
    out.push_back(tree_from_prufer(n, code));
    std::size_t i = 0;
    while (i < code.size() && code[i] == n) code[i++] = 1;
    if (i == code.size()) break;
    ++code[i];
  }
  return out;
}

/// Disjoint union of random trees with a total of at most max_vertices
/// vertices.
template <class Rng>
Graph random_forest(Rng& rng, int max_vertices) {
  int budget = std::uniform_int_distribution<int>(1, max_vertices)(rng);
  Graph out;
  while (budget > 0) {
    const int n = std::uniform_int_distribution<int>(1, budget)(rng);
    std::vector<Vertex> code;
    for (int k = 0; k + 2 < n; ++k) {
      code.push_back(std::uniform_int_distribution<Vertex>(1, n)(rng));
    }
    out = disjoint_union(out, tree_from_prufer(n, code));
    budget -= n;
  }
  return out;
}

}  // namespace gpoly::corpus
