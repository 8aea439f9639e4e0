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

#include "spantree/constructions.hpp"

#include <numeric>
#include <vector>

#include "spantree/random.hpp"

namespace spantree {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(what);
}

std::vector<Mask> rows_of(const Graph& g) {
  std::vector<Mask> r(g.order());
  for (int v = 0; v < g.order(); ++v) r[v] = g.row(v);
  return r;
}

}  // namespace

Graph complete(int n) {
  require(n >= 1, "complete graph needs order >= 1");
  return empty_graph(n).complement();
}

Graph empty_graph(int n) {
  require(n >= 1, "graph needs order >= 1");
  return Graph(n);
}

Graph complete_bipartite(int m, int n) {
  require(m >= 1 && n >= 1, "complete bipartite graph needs both sides >= 1");
  return join(empty_graph(m), empty_graph(n));
}

Graph path(int n) {
  require(n >= 1, "path needs order >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs order >= 3");
  return path(n).with_edge(n - 1, 0);
}

Graph star(int n) {
  require(n >= 1, "star needs order >= 1");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph::from_edges(n, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, e);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int a = g.order();
  const int n = a + h.order();
  require(n <= kMaxOrder, "disjoint union exceeds order 64");
  std::vector<Mask> rows = rows_of(g);
  for (int v = 0; v < h.order(); ++v) rows.push_back(h.row(v) << a);
  return Graph(n, rows);
}

Graph join(const Graph& g, const Graph& h) {
  const int a = g.order();
  const int n = a + h.order();
  require(n <= kMaxOrder, "join exceeds order 64");
  std::vector<Mask> rows(n);
  const Mask left = full_mask(a);
  const Mask right = full_mask(n) & ~left;
  for (int v = 0; v < a; ++v) rows[v] = g.row(v) | right;
  for (int v = 0; v < h.order(); ++v) rows[a + v] = (h.row(v) << a) | left;
  return Graph(n, rows);
}

namespace {

// K_s v (K_c + p K_1) with the K_s part first, then the clique, then pendants.
Graph hub_family(int s, int c, int p) {
  Graph rest = c > 0 ? complete(c) : empty_graph(p);
  if (c > 0 && p > 0) rest = disjoint_union(rest, empty_graph(p));
  return join(complete(s), rest);
}

}  // namespace

Graph kended_extremal(int n, int k) {
  require(k >= 2, "k-ended extremal graph needs k >= 2");
  require(n >= k + 2, "k-ended extremal graph needs n >= k + 2");
  return hub_family(1, n - k - 1, k);
}

Graph leafdeg_extremal(int n, int k) {
  require(k >= 1, "leaf-degree extremal graph needs k >= 1");
  require(n >= k + 3, "leaf-degree extremal graph needs n >= k + 3");
  return hub_family(1, n - k - 2, k + 1);
}

Graph fig2_family(int n, int k, int s) {
  require(k >= 1, "family needs k >= 1");
  require(s >= 1, "family needs s >= 1");
  require(n >= (k + 2) * s, "family needs n >= (k+2)s");
  return hub_family(s, n - (k + 2) * s, (k + 1) * s);
}

Graph regular_graph(int t, int r) {
  require(t >= 1, "regular graph needs t >= 1");
  require(r >= 0 && r < t, "regular graph needs 0 <= r < t");
  require((static_cast<long>(t) * r) % 2 == 0, "r-regular graph on t vertices needs t*r even");
  std::vector<Edge> e;
  for (int i = 0; i < t; ++i) {
    for (int d = 1; d <= r / 2; ++d) {
      const int j = (i + d) % t;
      if (i < j || d * 2 != t) e.emplace_back(i, j);
    }
    if (r % 2 == 1 && i < t / 2) e.emplace_back(i, i + t / 2);
  }
  return Graph::from_edges(t, e);
}

Graph regular_join(int n, int k, int t) {
  require((n + k) % 2 == 0, "regular join needs n + k even");
  require(2 * t >= n + k && t <= n, "regular join needs (n+k)/2 <= t <= n");
  Graph reg = regular_graph(t, t - (n + k) / 2);
  return t == n ? reg : join(reg, complete(n - t));
}

namespace {

// Is there a vertex h of degree n-1 such that G - h is K_c + p K_1 ?
bool hub_recognizer(const Graph& g, int c, int p) {
  const int n = g.order();
  if (c < 1 || p < 0 || 1 + c + p != n) return false;
  for (int h = 0; h < n; ++h) {
    if (g.degree(h) != n - 1) continue;
    const Mask rest = g.vertices() & ~bit(h);
    const Mask iso = g.isolated_after_removal(bit(h));
    const Mask clique = rest & ~iso;
    // A one-vertex clique part is itself isolated in G - h.
    const int want_iso = c == 1 ? p + 1 : p;
    if (popcount(iso) != want_iso) continue;
    if (c == 1) return true;
    if (popcount(clique) != c) continue;
    bool ok = true;
    for_each_bit(clique, [&](int v) { ok = ok && (g.row(v) & clique) == (clique & ~bit(v)); });
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool recognize_kended_extremal(const Graph& g, int k) {
  if (k < 2 || g.order() < k + 2) return false;
  return hub_recognizer(g, g.order() - k - 1, k);
}

bool recognize_leafdeg_extremal(const Graph& g, int k) {
  if (k < 1 || g.order() < k + 3) return false;
  return hub_recognizer(g, g.order() - k - 2, k + 1);
}

bool in_regular_join_family(const Graph& g, int k) {
  const int n = g.order();
  if ((n + k) % 2 != 0) return false;
  const int d = (n - k) / 2;
  int t = 0;
  for (int v = 0; v < n; ++v) {
    const int dv = g.degree(v);
    if (dv == d) {
      ++t;
    } else if (dv != n - 1) {
      return false;
    }
  }
  return 2 * t >= n + k && t <= n;
}

Graph random_relabel(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  shuffle(perm, rng);
  return g.relabeled(perm);
}

}  // namespace spantree
