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


#include "spantree/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spantree {

long binomial2(long m) { return m < 2 ? 0 : m * (m - 1) / 2; }

double hong_upper(const Graph& g) {
  return std::sqrt(static_cast<double>(2 * g.edge_count() - g.order() + 1));
}

double q_upper(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw Error("q upper bound needs order >= 2");
  return 2.0 * g.edge_count() / (n - 1) + n - 2;
}

namespace {

template <class F>
double min_over_edges(const Graph& g, F f) {
  if (g.edge_count() == 0) throw Error("graph has no edges");
  double best = std::numeric_limits<double>::infinity();
  for (auto [u, v] : g.edges()) best = std::min(best, f(g.degree(u), g.degree(v)));
  return best;
}

BoundReport upper(std::string name, double lhs, double rhs, double tol) {
  const double slack = rhs - lhs;
  return {std::move(name), lhs, rhs, slack >= -tol, slack};
}

BoundReport lower(std::string name, double lhs, double rhs, double tol) {
  const double slack = lhs - rhs;
  return {std::move(name), lhs, rhs, slack >= -tol, slack};
}

}  // namespace

double rho_lower_edges(const Graph& g) {
  return min_over_edges(g, [](int a, int b) { return std::sqrt(static_cast<double>(a) * b); });
}

double q_lower_edges(const Graph& g) {
  return min_over_edges(g, [](int a, int b) { return static_cast<double>(a + b); });
}

bool degree_sum_condition(const Graph& g, int k) {
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    const Mask non = g.vertices() & ~g.row(u) & ~full_mask(u + 1);
    bool ok = true;
    for_each_bit(non, [&](int v) { ok = ok && g.degree(u) + g.degree(v) >= n - k + 1; });
    if (!ok) return false;
  }
  return true;
}

bool is_regular(const Graph& g) { return g.min_degree() == g.max_degree(); }

bool is_semiregular_bipartite(const Graph& g) {
  if (!g.is_connected() || g.edge_count() == 0) return false;
  const int n = g.order();
  std::vector<int> side(n, -1);
  side[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int u = queue[i];
    bool ok = true;
    for_each_bit(g.row(u), [&](int v) {
      if (side[v] == -1) {
        side[v] = 1 - side[u];
        queue.push_back(v);
      } else if (side[v] == side[u]) {
        ok = false;
      }
    });
    if (!ok) return false;
  }
  int deg[2] = {-1, -1};
  for (int v = 0; v < n; ++v) {
    int& d = deg[side[v]];
    if (d == -1) d = g.degree(v);
    if (d != g.degree(v)) return false;
  }
  return true;
}

std::vector<BoundReport> spectral_bound_reports(const Graph& g, double tolerance) {
  const double r = rho(g);
  const double q = signless_radius(g);
  return {
      upper("rho <= sqrt(2e-n+1)", r, hong_upper(g), tolerance),
      upper("q <= 2e/(n-1)+n-2", q, q_upper(g), tolerance),
      lower("rho >= min sqrt(d(u)d(v))", r, rho_lower_edges(g), tolerance),
      lower("q >= min d(u)+d(v)", q, q_lower_edges(g), tolerance),
  };
}

SpectralThresholds main1_thresholds(int n, int k) {
  if (k < 2 || n < k + 2) throw Error("thresholds need k >= 2 and n >= k + 2");
  SpectralThresholds t;
  t.rho = quotient_radius(ExtremalFamily::kKEnded, n, k, MatrixKind::adjacency());
  t.q = quotient_radius(ExtremalFamily::kKEnded, n, k, MatrixKind::signless_laplacian());
  t.rho_bar = std::sqrt(static_cast<double>(k) * (n - 2));
  t.q_bar = n + k - 2;
  // Doubled to keep the half-integer coefficients exact.
  t.rho_regime = n >= 6 * k + 5 && 2 * n >= 2 * k * k + 3 * k + 4;
  t.q_regime = n >= 6 * k + 5 && 2 * n >= 3 * k * k + 3 * k + 4;
  return t;
}

EdgeThresholds lemma_edge_thresholds(int n, int k) {
  if (k < 2) throw Error("edge thresholds need k >= 2");
  EdgeThresholds t;
  t.e_lemma21 = binomial2(n - k - 1) + static_cast<long>(k) * k + k + 1;
  t.e_lemma22 = t.e_lemma21;
  t.clique_regime = n >= 6 * k + 5;
  t.tree_regime = t.clique_regime && n >= k * k + k + 2;
  return t;
}

LeafDegreeThreshold leafdeg_threshold(int n, int k, MatrixKind kind) {
  if (k < 1 || n < k + 3) throw Error("leaf-degree threshold needs k >= 1 and n >= k + 3");
  return {quotient_radius(ExtremalFamily::kLeafDegree, n, k, kind), n >= 2 * k + 12};
}

}  // namespace spantree
