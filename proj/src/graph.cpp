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

#include "spantree/graph.hpp"

#include <algorithm>

namespace spantree {

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for_each_bit(mask, [&](int v) { out.push_back(v); });
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder) {
    throw Error("graph order " + std::to_string(n) + " outside 1..64");
  }
}

Graph::Graph(int n, std::span<const Mask> rows) : Graph(n) {
  if (static_cast<int>(rows.size()) != n) throw Error("adjacency row count does not match order");
  const Mask all = full_mask(n);
  for (int i = 0; i < n; ++i) {
    if (rows[i] & ~all) throw Error("adjacency bit beyond vertex range in row " + std::to_string(i));
    if ((rows[i] >> i) & 1U) throw Error("loop at vertex " + std::to_string(i));
    adj_[i] = rows[i];
  }
  for (int i = 0; i < n; ++i) {
    for_each_bit(adj_[i], [&](int j) {
      if (!((adj_[j] >> i) & 1U)) throw Error("adjacency is not symmetric");
    });
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check(u);
    g.check(v);
    if (u == v) throw Error("loop at vertex " + std::to_string(u));
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int i = 0; i < n_; ++i) twice += popcount(adj_[i]);
  return twice / 2;
}

int Graph::min_degree() const {
  int d = n_;
  for (int i = 0; i < n_; ++i) d = std::min(d, popcount(adj_[i]));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int i = 0; i < n_; ++i) d = std::max(d, popcount(adj_[i]));
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int i = 0; i < n_; ++i) d[i] = popcount(adj_[i]);
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < n_; ++i) {
    for_each_bit(adj_[i] & ~full_mask(i + 1), [&](int j) { out.emplace_back(i, j); });
  }
  return out;
}

Graph Graph::complement() const {
  Graph g(n_);
  const Mask all = full_mask(n_);
  for (int i = 0; i < n_; ++i) g.adj_[i] = ~adj_[i] & all & ~bit(i);
  return g;
}

Graph Graph::with_edge(int u, int v) const {
  check(u);
  check(v);
  if (u == v) throw Error("loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.adj_[u] |= bit(v);
  g.adj_[v] |= bit(u);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check(u);
  check(v);
  Graph g = *this;
  g.adj_[u] &= ~bit(v);
  g.adj_[v] &= ~bit(u);
  return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw Error("permutation size does not match order");
  Mask seen = 0;
  for (int p : perm) {
    check(p);
    seen |= bit(p);
  }
  if (seen != full_mask(n_)) throw Error("relabeling is not a permutation");
  Graph g(n_);
  for (int i = 0; i < n_; ++i) {
    Mask r = 0;
    for_each_bit(adj_[i], [&](int j) { r |= bit(perm[j]); });
    g.adj_[perm[i]] = r;
  }
  return g;
}

Graph Graph::induced(Mask s) const {
  s &= full_mask(n_);
  if (s == 0) throw Error("induced subgraph on an empty vertex set");
  std::array<int, kMaxOrder> index{};
  int m = 0;
  for_each_bit(s, [&](int v) { index[v] = m++; });
  Graph g(m);
  for_each_bit(s, [&](int v) {
    Mask r = 0;
    for_each_bit(adj_[v] & s, [&](int w) { r |= bit(index[w]); });
    g.adj_[index[v]] = r;
  });
  return g;
}

namespace {

Mask reach_within(const std::array<Mask, kMaxOrder>& adj, Mask keep, int start) {
  Mask seen = bit(start);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for_each_bit(frontier, [&](int v) { next |= adj[v]; });
    next &= keep & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

bool Graph::is_connected() const { return reach_within(adj_, vertices(), 0) == vertices(); }

std::vector<Mask> Graph::components() const {
  std::vector<Mask> out;
  Mask left = vertices();
  while (left) {
    Mask c = reach_within(adj_, vertices(), lowest(left));
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

int Graph::component_count(Mask keep) const {
  keep &= vertices();
  int count = 0;
  while (keep) {
    keep &= ~reach_within(adj_, keep, lowest(keep));
    ++count;
  }
  return count;
}

Mask Graph::isolated_after_removal(Mask removed) const {
  const Mask rest = vertices() & ~removed;
  Mask iso = 0;
  for_each_bit(rest, [&](int v) {
    if ((adj_[v] & rest) == 0) iso |= bit(v);
  });
  return iso;
}

int Graph::isolated_count(VertexSet removed) const {
  if (removed.mask & ~vertices()) throw Error("removed set contains vertices outside the graph");
  return popcount(isolated_after_removal(removed.mask));
}

bool Graph::is_subgraph_of(const Graph& other) const {
  if (n_ != other.n_) return false;
  for (int i = 0; i < n_; ++i) {
    if (adj_[i] & ~other.adj_[i]) return false;
  }
  return true;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return false;
  return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

// ---------------------------------------------------------------------------
// Maximum clique: branch and bound with a greedy colouring bound.

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  Mask run() {
    expand(0, g_.vertices());
    return best_;
  }

 private:
  // Greedy sequential colouring of `cand`; order[i] receives colour[i],
  // colours non-decreasing along the order.
  int colour(Mask cand, std::array<int, kMaxOrder>& order, std::array<int, kMaxOrder>& col) const {
    int count = 0;
    int c = 0;
    Mask uncoloured = cand;
    while (uncoloured) {
      ++c;
      Mask avail = uncoloured;
      while (avail) {
        int v = lowest(avail);
        avail &= ~bit(v) & ~g_.row(v);
        uncoloured &= ~bit(v);
        order[count] = v;
        col[count] = c;
        ++count;
      }
    }
    return count;
  }

  void expand(Mask clique, Mask cand) {
    if (cand == 0) {
      if (popcount(clique) > popcount(best_)) best_ = clique;
      return;
    }
    std::array<int, kMaxOrder> order{};
    std::array<int, kMaxOrder> col{};
    const int m = colour(cand, order, col);
    const int size = popcount(clique);
    for (int i = m - 1; i >= 0; --i) {
      if (size + col[i] <= popcount(best_)) return;
      const int v = order[i];
      expand(clique | bit(v), cand & g_.row(v));
      cand &= ~bit(v);
    }
  }

  const Graph& g_;
  Mask best_ = 0;
};

}  // namespace

Mask maximum_clique(const Graph& g) { return CliqueSearch(g).run(); }

int clique_number(const Graph& g) { return popcount(maximum_clique(g)); }

// ---------------------------------------------------------------------------
// Isomorphism by backtracking over vertex maps with degree pruning.

namespace {

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h) : g_(g), h_(h), n_(g.order()) {}

  bool run() {
    auto dg = g_.degrees();
    auto dh = h_.degrees();
    auto sg = dg;
    auto sh = dh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
    dg_ = std::move(dg);
    dh_ = std::move(dh);
    // Map high-degree vertices first; they constrain the most.
    for (int i = 0; i < n_; ++i) order_[i] = i;
    std::sort(order_.begin(), order_.begin() + n_,
              [&](int a, int b) { return dg_[a] != dg_[b] ? dg_[a] > dg_[b] : a < b; });
    map_.fill(-1);
    return extend(0, 0);
  }

 private:
  bool extend(int depth, Mask used) {
    if (depth == n_) return true;
    const int v = order_[depth];
    for (int w = 0; w < n_; ++w) {
      if ((used >> w) & 1U) continue;
      if (dh_[w] != dg_[v]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const int u = order_[d];
        ok = g_.adjacent(u, v) == h_.adjacent(map_[u], w);
      }
      if (!ok) continue;
      map_[v] = w;
      if (extend(depth + 1, used | bit(w))) return true;
      map_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  int n_;
  std::vector<int> dg_, dh_;
  std::array<int, kMaxOrder> order_{};
  std::array<int, kMaxOrder> map_{};
};

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  if (g.order() > kMaxIsomorphismOrder) {
    throw Error("general isomorphism is limited to order <= 12");
  }
  if (g.edge_count() != h.edge_count()) return false;
  return IsoSearch(g, h).run();
}

}  // namespace spantree
