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

#include <optional>
#include <string>
#include <vector>

#include "spantree/graph.hpp"
#include "spantree/kaneko.hpp"

namespace spantree {

/// A spanning tree stored as a parent array rooted at vertex 0.
///
/// The one-vertex tree has no leaves and leaf degree 0; the two-vertex tree
/// has two leaves and leaf degree 1.
struct TreeWitness {
  std::vector<int> parent;
  VertexSet leaf_set;
  int leaf_count = 0;
  /// Max over vertices of the number of tree neighbours that are leaves.
  int leaf_degree = 0;

  /// Builds the witness from n-1 edges forming a tree on 0..n-1.
  static TreeWitness from_edges(int n, const std::vector<Edge>& edges);
  std::vector<Edge> edges() const;
  /// "root: r; parents: p0 p1 ... p(n-1)"
  std::string format() const;
};

/// Checks that w is a spanning tree of g and that its statistics are right.
bool validate_tree(const Graph& g, const TreeWitness& w);

struct TreeOptimum {
  int value = 0;
  TreeWitness witness;
};

inline constexpr int kMaxMinLeafOrder = 20;
inline constexpr int kMaxHamiltonOrder = 17;
inline constexpr int kMaxLeafDegreeOrder = 16;
/// Node limit for one exhaustive leaf-degree search.
inline constexpr long kLeafDegreeSearchBudget = 200'000'000;

/// Thrown when an exhaustive search exceeds its node budget.
class SearchLimit : public Error {
 public:
  using Error::Error;
};

/// Hamilton path by subset dynamic programming over (vertex set, end).
/// Returns the vertex sequence, or nullopt. Order <= 17.
std::optional<std::vector<int>> hamiltonian_path(const Graph& g);

/// Minimum number of leaves over all spanning trees, with a witness.
/// Connected input of order <= 20.
TreeOptimum min_leaf_spanning_tree(const Graph& g);

struct KEndedAnswer {
  bool exists = false;
  std::optional<TreeWitness> witness;
};

/// Spanning tree with at most k leaves? k >= 2, g connected. Trivially true
/// for k >= n - 1 at any order; otherwise order <= 20.
KEndedAnswer has_k_ended_tree(const Graph& g, int k);

enum class LeafDegreeMode {
  /// Decide infeasibility with the violating-subset certificate, search
  /// only for the witness tree.
  kKanekoAssisted,
  /// Decide everything by exhaustive tree search.
  kTreeSearchOnly,
};

/// Minimum leaf degree over all spanning trees, with a witness.
/// Connected input of order <= 16. The tree search is exhaustive and can
/// hit kLeafDegreeSearchBudget on dense graphs without such a tree; it then
/// throws SearchLimit.
TreeOptimum min_leaf_degree_spanning_tree(const Graph& g,
                                          LeafDegreeMode mode = LeafDegreeMode::kKanekoAssisted);

struct LeafDegreeAnswer {
  bool exists = false;
  std::optional<TreeWitness> witness;
  /// Set when the answer is false and was certified by a violating subset.
  std::optional<KanekoWitness> certificate;
};

/// Spanning tree with leaf degree at most k? k >= 1, g connected, order
/// <= 16 (<= 24 in assisted mode, without a witness above 16). A false
/// answer carries a certificate unless no violating subset exists, which
/// happens for K_3 at k = 1.
LeafDegreeAnswer has_leafdeg_tree(const Graph& g, int k,
                                  LeafDegreeMode mode = LeafDegreeMode::kKanekoAssisted);

}  // namespace spantree
