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

/**
 * @file graph.hpp
 * @brief Finite multigraphs and the edge/vertex operations used by the
 * polynomial recurrences.
 *
 * A Graph is a value: every operation returns a new graph. Loops are edges
 * {u, u}; parallel edges are repeated entries in the edge list. The edge list
 * order is stable and defines what an EdgeRef points at.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gpoly/errors.hpp"

namespace gpoly {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex w = 0;

  bool is_loop() const noexcept { return u == w; }
  bool touches(Vertex a) const noexcept { return u == a || w == a; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Position of one edge occurrence in a graph's edge list.
struct EdgeRef {
  std::size_t index = 0;
};

class Graph {
 public:
  Graph() = default;

  /// Throws UnknownVertex if an edge endpoint is not in `vertices`.
  Graph(std::vector<Vertex> vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) !=
        vertices_.end()) {
      throw Error("duplicate vertex label");
    }
    for (const Edge& e : edges_) {
      if (!has_vertex(e.u) || !has_vertex(e.w)) {
        throw UnknownVertex("edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.w) +
                            "} has an endpoint that is not a vertex");
      }
    }
  }

  /// Vertices labeled 1..n and the given edges.
  static Graph with_vertices(int n, std::vector<Edge> edges = {}) {
    std::vector<Vertex> vertices(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(vertices.begin(), vertices.end(), 1);
    return Graph(std::move(vertices), std::move(edges));
  }

  /// Sorted ascending.
  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  bool has_vertex(Vertex u) const noexcept {
    return std::binary_search(vertices_.begin(), vertices_.end(), u);
  }

  /// Dense index of a vertex label in [0, vertex_count()).
  std::size_t index_of(Vertex u) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), u);
    if (it == vertices_.end() || *it != u) {
      throw UnknownVertex("vertex " + std::to_string(u) + " not in graph");
    }
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  const Edge& edge(EdgeRef ref) const {
    check(ref);
    return edges_[ref.index];
  }

  void check(EdgeRef ref) const {
    if (ref.index >= edges_.size()) {
      throw InvalidEdgeRef("edge index " + std::to_string(ref.index) +
                           " out of range (" + std::to_string(edges_.size()) +
                           " edges)");
    }
  }

  bool is_simple() const noexcept {
    std::vector<std::pair<Vertex, Vertex>> seen;
    seen.reserve(edges_.size());
    for (const Edge& e : edges_) {
      if (e.is_loop()) return false;
      seen.emplace_back(std::min(e.u, e.w), std::max(e.u, e.w));
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// G - e: same vertices, edge e removed.
inline Graph delete_edge(const Graph& g, EdgeRef e) {
  g.check(e);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e.index));
  return Graph({g.vertices().begin(), g.vertices().end()}, std::move(edges));
}

/// G / e: for e = {u, w} with u != w the endpoint w is merged into u, so
/// edges parallel to e become loops at u. Contracting a loop only removes it.
inline Graph contract_edge(const Graph& g, EdgeRef e) {
  const Edge pivot = g.edge(e);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (i == e.index) continue;
    Edge f = g.edges()[i];
    if (f.u == pivot.w) f.u = pivot.u;
    if (f.w == pivot.w) f.w = pivot.u;
    edges.push_back(f);
  }
  std::vector<Vertex> vertices;
  vertices.reserve(g.vertex_count());
  for (Vertex a : g.vertices()) {
    if (pivot.is_loop() || a != pivot.w) vertices.push_back(a);
  }
  return Graph(std::move(vertices), std::move(edges));
}

/// G † e: the endpoints of e and every edge touching them are removed.
inline Graph extract_edge(const Graph& g, EdgeRef e) {
  const Edge pivot = g.edge(e);
  std::vector<Vertex> vertices;
  for (Vertex a : g.vertices()) {
    if (!pivot.touches(a)) vertices.push_back(a);
  }
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    if (!f.touches(pivot.u) && !f.touches(pivot.w)) edges.push_back(f);
  }
  return Graph(std::move(vertices), std::move(edges));
}

inline Graph delete_vertex(const Graph& g, Vertex u) {
  if (!g.has_vertex(u)) {
    throw UnknownVertex("vertex " + std::to_string(u) + " not in graph");
  }
  std::vector<Vertex> vertices;
  for (Vertex a : g.vertices()) {
    if (a != u) vertices.push_back(a);
  }
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    if (!f.touches(u)) edges.push_back(f);
  }
  return Graph(std::move(vertices), std::move(edges));
}

/// G1 ⊔ G2. Labels of g2 are shifted above the largest label of g1.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  if (g1.empty()) return g2;
  if (g2.empty()) return g1;
  const Vertex shift = g1.vertices().back() + 1 - g2.vertices().front();
  std::vector<Vertex> vertices(g1.vertices().begin(), g1.vertices().end());
  for (Vertex a : g2.vertices()) vertices.push_back(a + shift);
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  for (const Edge& f : g2.edges()) edges.push_back({f.u + shift, f.w + shift});
  return Graph(std::move(vertices), std::move(edges));
}

/// G[W]: vertices W and the edges with every endpoint in W.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> w) {
  std::vector<Vertex> vertices(w.begin(), w.end());
  for (Vertex a : vertices) {
    if (!g.has_vertex(a)) {
      throw UnknownVertex("vertex " + std::to_string(a) + " not in graph");
    }
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  auto inside = [&](Vertex a) {
    return std::binary_search(vertices.begin(), vertices.end(), a);
  };
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    if (inside(f.u) && inside(f.w)) edges.push_back(f);
  }
  return Graph(std::move(vertices), std::move(edges));
}

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent_[b] = a;
    --sets_;
  }

  std::size_t set_count() const noexcept { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t sets_;
};

}  // namespace detail

/// Number of connected components k(G); isolated vertices count, k(∅) = 0.
inline std::size_t component_count(const Graph& g) {
  detail::DisjointSets sets(g.vertex_count());
  for (const Edge& f : g.edges()) sets.unite(g.index_of(f.u), g.index_of(f.w));
  return sets.set_count();
}

/// Number of edges incident to u. A loop counts once.
inline std::size_t degree(const Graph& g, Vertex u) {
  if (!g.has_vertex(u)) {
    throw UnknownVertex("vertex " + std::to_string(u) + " not in graph");
  }
  return static_cast<std::size_t>(
      std::count_if(g.edges().begin(), g.edges().end(),
                    [u](const Edge& f) { return f.touches(u); }));
}

/// Vertex-deleted subgraphs, one per vertex in ascending label order.
inline std::vector<Graph> deck(const Graph& g) {
  if (g.empty()) throw EmptyGraphError("the deck of the empty graph is undefined");
  std::vector<Graph> out;
  out.reserve(g.vertex_count());
  for (Vertex u : g.vertices()) out.push_back(delete_vertex(g, u));
  return out;
}

}  // namespace gpoly
