// Copyright 2026 The spantree Authors
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

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spantree {

/// Raised for any precondition or domain violation inside the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxOrder = 64;

using Mask = std::uint64_t;

inline constexpr Mask bit(int v) { return Mask{1} << v; }

/// Mask with bits 0..n-1 set.
inline constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

/// Calls f(v) for every set bit v of m, in increasing order.
template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    int v = std::countr_zero(m);
    m &= m - 1;
    f(v);
  }
}

/// A subset of vertices, one bit per vertex.
struct VertexSet {
  Mask mask = 0;

  bool contains(int v) const { return (mask >> v) & 1U; }
  int size() const { return popcount(mask); }
  bool empty() const { return mask == 0; }
  std::vector<int> members() const;
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on at most 64 vertices.
///
/// Row i of the adjacency holds bit j iff ij is an edge. Construction
/// validates symmetry, loop-freeness and that no bit at or above n is set.
class Graph {
 public:
  /// The graph on a single vertex.
  Graph() : Graph(1) {}
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  Graph(int n, std::span<const Mask> rows);

  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  Mask row(int v) const { return adj_[check(v)]; }
  Mask neighbors(int v) const { return row(v); }
  bool adjacent(int u, int v) const { return (row(u) >> check(v)) & 1U; }
  Mask vertices() const { return full_mask(n_); }

  int degree(int v) const { return popcount(row(v)); }
  int edge_count() const;
  int min_degree() const;
  int max_degree() const;
  std::vector<int> degrees() const;
  std::vector<Edge> edges() const;

  Graph complement() const;
  /// Returns a copy with uv added (u != v); a no-op copy if already present.
  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  /// Relabels so that vertex v of this graph becomes perm[v].
  Graph relabeled(std::span<const int> perm) const;
  /// Subgraph induced on the given vertices, relabeled 0..|s|-1 in order.
  Graph induced(Mask s) const;

  bool is_connected() const;
  /// Connected components as vertex masks, ordered by smallest member.
  std::vector<Mask> components() const;
  /// Number of components of the subgraph induced on `keep`.
  int component_count(Mask keep) const;

  /// i(G-S): vertices outside `removed` with no neighbour outside it.
  int isolated_count(VertexSet removed) const;
  Mask isolated_after_removal(Mask removed) const;

  bool is_subgraph_of(const Graph& other) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int check(int v) const {
    if (v < 0 || v >= n_) throw Error("vertex index " + std::to_string(v) + " out of range");
    return v;
  }

  int n_;
  std::array<Mask, kMaxOrder> adj_{};
};

/// Order of a largest clique (exact).
int clique_number(const Graph& g);
/// A largest clique, as a vertex mask.
Mask maximum_clique(const Graph& g);

inline constexpr int kMaxIsomorphismOrder = 12;

/// Exact isomorphism test by backtracking; both graphs must have order <= 12.
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace spantree
