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

#include <string>
#include <vector>

#include "spantree/graph.hpp"
#include "spantree/spectra.hpp"

namespace spantree {

/// One inequality evaluated on one graph. For upper bounds slack = rhs - lhs,
/// for lower bounds slack = lhs - rhs, so holds <=> slack >= -tolerance.
struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double slack = 0.0;
};

/// sqrt(2e - n + 1), an upper bound on rho for connected graphs.
double hong_upper(const Graph& g);
/// 2e/(n-1) + n - 2, an upper bound on q for connected graphs (n >= 2).
double q_upper(const Graph& g);
/// min over edges uv of sqrt(d(u) d(v)); throws on an edgeless graph.
double rho_lower_edges(const Graph& g);
/// min over edges uv of d(u) + d(v); throws on an edgeless graph.
double q_lower_edges(const Graph& g);

/// Every nonadjacent pair has d(u) + d(v) >= n - k + 1.
bool degree_sum_condition(const Graph& g, int k);

bool is_regular(const Graph& g);
/// Connected bipartite graph whose sides are each regular, with the two
/// side degrees different or equal.
bool is_semiregular_bipartite(const Graph& g);

/// rho and q checked against the four bounds, in the order hong_upper,
/// q_upper, rho_lower_edges, q_lower_edges. Connected, at least one edge.
std::vector<BoundReport> spectral_bound_reports(const Graph& g,
                                                double tolerance = kComparisonSlack);

struct SpectralThresholds {
  double rho = 0.0;
  double q = 0.0;
  double rho_bar = 0.0;
  double q_bar = 0.0;
  /// n >= max{6k+5, k^2 + 3k/2 + 2}.
  bool rho_regime = false;
  /// n >= max{6k+5, 3k^2/2 + 3k/2 + 2}.
  bool q_regime = false;
};

/// Thresholds for spanning k-ended trees at order n: the radii of the
/// extremal graph, sqrt(k(n-2)) and n + k - 2. Requires k >= 2, n >= k + 2.
SpectralThresholds main1_thresholds(int n, int k);

struct EdgeThresholds {
  long e_lemma21 = 0;
  long e_lemma22 = 0;
  /// n >= 6k + 5.
  bool clique_regime = false;
  /// n >= max{6k+5, k^2 + k + 2}.
  bool tree_regime = false;
};

/// C(n-k-1, 2) + k^2 + k + 1 for both edge conditions. Requires k >= 2.
EdgeThresholds lemma_edge_thresholds(int n, int k);

/// Leaf-degree threshold rho_a of the leaf-degree extremal graph, with
/// the regime flag n >= 2k + 12.
struct LeafDegreeThreshold {
  double radius = 0.0;
  bool regime = false;
};
LeafDegreeThreshold leafdeg_threshold(int n, int k, MatrixKind kind);

long binomial2(long m);

}  // namespace spantree
