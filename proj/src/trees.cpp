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

#include "spantree/trees.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <sstream>

namespace spantree {

// ---------------------------------------------------------------------------
// TreeWitness

namespace {

void fill_stats(TreeWitness& w, const std::vector<Mask>& tadj) {
  const int n = static_cast<int>(w.parent.size());
  Mask leaves = 0;
  if (n >= 2) {
    for (int v = 0; v < n; ++v) {
      if (popcount(tadj[v]) == 1) leaves |= bit(v);
    }
  }
  w.leaf_set = VertexSet{leaves};
  w.leaf_count = popcount(leaves);
  w.leaf_degree = 0;
  for (int v = 0; v < n; ++v) w.leaf_degree = std::max(w.leaf_degree, popcount(tadj[v] & leaves));
}

std::vector<Mask> tree_adjacency(int n, const std::vector<Edge>& edges) {
  std::vector<Mask> tadj(n, 0);
  for (auto [u, v] : edges) {
    tadj[u] |= bit(v);
    tadj[v] |= bit(u);
  }
  return tadj;
}

}  // namespace

TreeWitness TreeWitness::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 1 || n > kMaxOrder) throw Error("tree order outside 1..64");
  if (static_cast<int>(edges.size()) != n - 1) throw Error("a spanning tree needs n - 1 edges");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw Error("bad tree edge");
  }
  auto tadj = tree_adjacency(n, edges);
  TreeWitness w;
  w.parent.assign(n, -1);
  w.parent[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int u = queue[i];
    for_each_bit(tadj[u], [&](int v) {
      if (w.parent[v] == -1) {
        w.parent[v] = u;
        queue.push_back(v);
      }
    });
  }
  if (static_cast<int>(queue.size()) != n) throw Error("edges do not form a spanning tree");
  fill_stats(w, tadj);
  return w;
}

std::vector<Edge> TreeWitness::edges() const {
  std::vector<Edge> out;
  for (int v = 0; v < static_cast<int>(parent.size()); ++v) {
    if (parent[v] != v) out.emplace_back(std::min(v, parent[v]), std::max(v, parent[v]));
  }
  return out;
}

std::string TreeWitness::format() const {
  std::ostringstream os;
  int root = 0;
  for (int v = 0; v < static_cast<int>(parent.size()); ++v) {
    if (parent[v] == v) root = v;
  }
  os << "root: " << root << "; parents:";
  for (int p : parent) os << ' ' << p;
  return os.str();
}

bool validate_tree(const Graph& g, const TreeWitness& w) {
  const int n = g.order();
  if (static_cast<int>(w.parent.size()) != n) return false;
  int roots = 0;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    const int p = w.parent[v];
    if (p < 0 || p >= n) return false;
    if (p == v) {
      ++roots;
      continue;
    }
    if (!g.adjacent(v, p)) return false;
    edges.emplace_back(v, p);
  }
  if (roots != 1) return false;
  // Every vertex must reach the root; n-1 edges plus connectivity is a tree.
  for (int v = 0; v < n; ++v) {
    int x = v;
    for (int steps = 0; steps <= n && w.parent[x] != x; ++steps) x = w.parent[x];
    if (w.parent[x] != x) return false;
  }
  TreeWitness fresh;
  fresh.parent = w.parent;
  fill_stats(fresh, tree_adjacency(n, edges));
  return fresh.leaf_set == w.leaf_set && fresh.leaf_count == w.leaf_count &&
         fresh.leaf_degree == w.leaf_degree;
}

// ---------------------------------------------------------------------------
// Shared helpers

namespace {

void require_connected(const Graph& g) {
  if (!g.is_connected()) throw Error("graph is not connected");
}

TreeWitness trivial_tree(const Graph& g) {
  if (g.order() == 1) return TreeWitness::from_edges(1, {});
  return TreeWitness::from_edges(2, {{0, 1}});
}

// DFS tree from `start` that always steps to the unvisited neighbour with
// the fewest unvisited neighbours (ties to the smaller index).
TreeWitness greedy_dfs_tree(const Graph& g, int start) {
  const int n = g.order();
  std::vector<Edge> edges;
  Mask visited = bit(start);
  std::vector<int> stack{start};
  while (!stack.empty()) {
    const int u = stack.back();
    const Mask cand = g.row(u) & ~visited;
    if (cand == 0) {
      stack.pop_back();
      continue;
    }
    int best = -1;
    int best_deg = kMaxOrder + 1;
    for_each_bit(cand, [&](int w) {
      const int d = popcount(g.row(w) & ~visited);
      if (d < best_deg) {
        best = w;
        best_deg = d;
      }
    });
    visited |= bit(best);
    edges.emplace_back(u, best);
    stack.push_back(best);
  }
  return TreeWitness::from_edges(n, edges);
}

template <class Better>
TreeWitness best_greedy_tree(const Graph& g, Better better) {
  TreeWitness best = greedy_dfs_tree(g, 0);
  for (int s = 1; s < g.order(); ++s) {
    TreeWitness t = greedy_dfs_tree(g, s);
    if (better(t, best)) best = std::move(t);
  }
  return best;
}

TreeWitness path_tree(int n, const std::vector<int>& seq) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) edges.emplace_back(seq[i], seq[i + 1]);
  return TreeWitness::from_edges(n, edges);
}

// Every spanning tree T satisfies leaves(T) = 2 + sum over v of
// (deg_T(v) - 2)^+, and deg_T(v) is at least the number of components of
// G - v. Degree-one vertices of G are leaves of every spanning tree.
int min_leaf_lower_bound(const Graph& g) {
  const int n = g.order();
  if (n <= 2) return n == 1 ? 0 : 2;
  int excess = 0;
  int pendants = 0;
  for (int v = 0; v < n; ++v) {
    excess += std::max(0, g.component_count(g.vertices() & ~bit(v)) - 2);
    if (g.degree(v) == 1) ++pendants;
  }
  return std::max({2, pendants, 2 + excess});
}

}  // namespace

// ---------------------------------------------------------------------------
// Hamilton path

std::optional<std::vector<int>> hamiltonian_path(const Graph& g) {
  const int n = g.order();
  if (n > kMaxHamiltonOrder) throw Error("Hamilton path DP is limited to order <= 17");
  if (n == 1) return std::vector<int>{0};
  const std::size_t states = std::size_t{1} << n;
  // ends[S] has bit v iff some Hamilton path of G[S] ends at v.
  std::vector<std::uint32_t> ends(states, 0);
  for (int v = 0; v < n; ++v) ends[bit(v)] = static_cast<std::uint32_t>(bit(v));
  for (std::size_t s = 1; s < states; ++s) {
    const Mask e = ends[s];
    if (e == 0) continue;
    for_each_bit(e, [&](int v) {
      for_each_bit(g.row(v) & ~Mask{s}, [&](int w) { ends[s | bit(w)] |= static_cast<std::uint32_t>(bit(w)); });
    });
  }
  Mask s = full_mask(n);
  if (ends[s] == 0) return std::nullopt;
  std::vector<int> seq;
  int v = lowest(ends[s]);
  while (true) {
    seq.push_back(v);
    const Mask rest = s & ~bit(v);
    if (rest == 0) break;
    v = lowest(ends[rest] & g.row(v));
    s = rest;
  }
  return seq;
}

// ---------------------------------------------------------------------------
// Minimum-leaf spanning tree
//
// A spanning tree with L >= 2 leaves splits into L - 1 vertex-disjoint
// paths: one path between two leaves, then repeatedly a path that starts at
// a vertex adjacent to what is already covered and runs out to a new leaf.
// Conversely any such sequence of c paths gives a spanning tree with at most
// c + 1 leaves. The DP below computes, for every covered set S and end v of
// the path under construction, the fewest paths needed; the minimum leaf
// count is that number plus one.

namespace {

constexpr std::uint8_t kInf = std::numeric_limits<std::uint8_t>::max();

class MinLeafDp {
 public:
  MinLeafDp(const Graph& g, int cost_bound) : g_(g), n_(g.order()), bound_(cost_bound) {}

  // Fewest paths (< bound) covering every vertex, or nullopt.
  std::optional<TreeWitness> run() {
    const std::size_t states = std::size_t{1} << n_;
    cost_.assign(states * n_, kInf);
    for (int v = 0; v < n_; ++v) at(bit(v), v) = 1;
    for (std::size_t s = 1; s < states; ++s) relax(Mask{s});
    const Mask all = full_mask(n_);
    int best_end = -1;
    std::uint8_t best = kInf;
    for (int v = 0; v < n_; ++v) {
      if (at(all, v) < best) {
        best = at(all, v);
        best_end = v;
      }
    }
    if (best_end < 0 || best >= bound_) return std::nullopt;
    return rebuild(best_end);
  }

 private:
  std::uint8_t& at(Mask s, int v) { return cost_[static_cast<std::size_t>(s) * n_ + v]; }

  std::uint8_t min_cost(Mask s) {
    std::uint8_t m = kInf;
    for_each_bit(s, [&](int v) { m = std::min(m, at(s, v)); });
    return m;
  }

  void relax(Mask s) {
    const std::uint8_t m = min_cost(s);
    if (m >= bound_) return;
    const Mask out = full_mask(n_) & ~s;
    Mask frontier = 0;
    for_each_bit(s, [&](int v) {
      frontier |= g_.row(v);
      const std::uint8_t c = at(s, v);
      if (c >= bound_) return;
      for_each_bit(g_.row(v) & out, [&](int w) {
        auto& slot = at(s | bit(w), w);
        slot = std::min(slot, c);
      });
    });
    if (m + 1 >= bound_) return;
    for_each_bit(frontier & out, [&](int w) {
      auto& slot = at(s | bit(w), w);
      slot = std::min<std::uint8_t>(slot, m + 1);
    });
  }

  TreeWitness rebuild(int end) {
    std::vector<Edge> edges;
    Mask s = full_mask(n_);
    int v = end;
    while (popcount(s) > 1) {
      const std::uint8_t c = at(s, v);
      const Mask rest = s & ~bit(v);
      int next = -1;
      for_each_bit(rest & g_.row(v), [&](int u) {
        if (next < 0 && at(rest, u) <= c) next = u;
      });
      if (next >= 0) {
        edges.emplace_back(next, v);
      } else {
        // v started a new path, attached to some covered neighbour.
        edges.emplace_back(lowest(rest & g_.row(v)), v);
        for_each_bit(rest, [&](int u) {
          if (next < 0 && at(rest, u) + 1 <= c) next = u;
        });
      }
      s = rest;
      v = next;
    }
    return TreeWitness::from_edges(n_, edges);
  }

  const Graph& g_;
  int n_;
  int bound_;
  std::vector<std::uint8_t> cost_;
};

}  // namespace

TreeOptimum min_leaf_spanning_tree(const Graph& g) {
  require_connected(g);
  const int n = g.order();
  if (n <= 2) {
    TreeWitness w = trivial_tree(g);
    return {w.leaf_count, w};
  }
  if (n > kMaxMinLeafOrder) throw Error("exact minimum-leaf search is limited to order <= 20");
  const int lower = min_leaf_lower_bound(g);
  TreeWitness best = best_greedy_tree(
      g, [](const TreeWitness& a, const TreeWitness& b) { return a.leaf_count < b.leaf_count; });
  if (best.leaf_count > lower) {
    // Paths used = leaves - 1; look only for strictly fewer.
    if (auto w = MinLeafDp(g, best.leaf_count - 1).run()) best = *w;
  }
  return {best.leaf_count, best};
}

KEndedAnswer has_k_ended_tree(const Graph& g, int k) {
  if (k < 2) throw Error("k-ended trees need k >= 2");
  require_connected(g);
  const int n = g.order();
  if (k >= n - 1) {
    // Every spanning tree has at most n - 1 leaves.
    TreeWitness w = n <= 2 ? trivial_tree(g) : greedy_dfs_tree(g, 0);
    return {true, w};
  }
  if (k == 2 && n <= kMaxHamiltonOrder) {
    if (auto seq = hamiltonian_path(g)) return {true, path_tree(n, *seq)};
    return {false, std::nullopt};
  }
  auto [leaves, witness] = min_leaf_spanning_tree(g);
  if (leaves <= k) return {true, witness};
  return {false, std::nullopt};
}

// ---------------------------------------------------------------------------
// Leaf degree
//
// Exhaustive search over spanning trees grown breadth-first from vertex 0.
// The vertex at the head of the queue decides, neighbour by neighbour,
// which still-uncovered vertices become its children; once it is done it is
// closed for good. Every spanning tree arises exactly once this way.
// Pruning: uncovered vertices must stay reachable through uncovered
// vertices from something that can still adopt them, and the leaves that
// are already certain (childless vertices that can no longer get children,
// degree-one vertices of G) must not overload any vertex.

namespace {

class LeafDegreeSearch {
 public:
  explicit LeafDegreeSearch(const Graph& g) : g_(g), n_(g.order()), all_(full_mask(n_)) {}

  std::optional<TreeWitness> find(int k) {
    k_ = k;
    parent_.fill(-1);
    children_.fill(0);
    parent_[0] = 0;
    order_[0] = 0;
    count_ = 1;
    covered_ = bit(0);
    closed_ = 0;
    nodes_ = 0;
    result_.reset();
    if (visit(0, g_.row(0))) return result_;
    return std::nullopt;
  }

 private:
  bool visit(int head, Mask cand) {
    if (++nodes_ > kLeafDegreeSearchBudget) throw SearchLimit("leaf-degree search exceeded its node budget");
    if (covered_ == all_) return finish();
    if (head == count_) return false;
    if (!viable(head, cand)) return false;
    const int u = order_[head];
    if (cand == 0) {
      closed_ |= bit(u);
      const bool ok = head + 1 < count_ && visit(head + 1, g_.row(order_[head + 1]) & ~covered_);
      closed_ &= ~bit(u);
      return ok;
    }
    const int w = lowest(cand);
    const Mask rest = cand & ~bit(w);
    // Leaving w for later first tends to produce path-like trees.
    if (visit(head, rest)) return true;
    covered_ |= bit(w);
    parent_[w] = u;
    ++children_[u];
    order_[count_++] = w;
    const bool ok = visit(head, rest);
    --count_;
    --children_[u];
    parent_[w] = -1;
    covered_ &= ~bit(w);
    return ok;
  }

  bool viable(int head, Mask cand) const {
    const Mask uncovered = all_ & ~covered_;
    // Connectivity of what is left.
    Mask seeds = cand;
    for (int i = head + 1; i < count_; ++i) seeds |= g_.row(order_[i]);
    Mask reach = seeds & uncovered;
    Mask frontier = reach;
    while (frontier) {
      Mask next = 0;
      for_each_bit(frontier, [&](int v) { next |= g_.row(v); });
      next &= uncovered & ~reach;
      reach |= next;
      frontier = next;
    }
    if (reach != uncovered) return false;

    // Leaves already certain.
    std::array<int, kMaxOrder> load{};
    const int u = order_[head];
    for (int i = 1; i < count_; ++i) {
      const int x = order_[i];
      if (children_[x] != 0) continue;
      const bool stuck = (closed_ >> x) & 1U || (x == u ? cand == 0 : (g_.row(x) & uncovered) == 0);
      if (stuck && ++load[parent_[x]] > k_) return false;
    }
    if ((closed_ & 1U) && children_[0] == 1) {
      // The root itself is a leaf hanging off its only child.
      for (int i = 1; i < count_; ++i) {
        if (parent_[order_[i]] == 0 && ++load[order_[i]] > k_) return false;
      }
    }
    bool ok = true;
    for_each_bit(uncovered, [&](int w) {
      if (g_.degree(w) == 1 && ++load[lowest(g_.row(w))] > k_) ok = false;
    });
    return ok;
  }

  bool finish() {
    std::vector<Edge> edges;
    for (int v = 1; v < n_; ++v) edges.emplace_back(parent_[v], v);
    TreeWitness w = TreeWitness::from_edges(n_, edges);
    if (w.leaf_degree > k_) return false;
    result_ = std::move(w);
    return true;
  }

  const Graph& g_;
  int n_;
  Mask all_;
  int k_ = 0;
  std::array<int, kMaxOrder> parent_{};
  std::array<int, kMaxOrder> children_{};
  std::array<int, kMaxOrder> order_{};
  int count_ = 0;
  long nodes_ = 0;
  Mask covered_ = 0;
  Mask closed_ = 0;
  std::optional<TreeWitness> result_;
};

// Degree-one vertices of G are leaves adjacent to their unique neighbour.
int leaf_degree_lower_bound(const Graph& g) {
  std::array<int, kMaxOrder> load{};
  int best = g.order() >= 2 ? 1 : 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1 && g.order() > 2) best = std::max(best, ++load[lowest(g.row(v))]);
  }
  return best;
}

void check_leafdeg_input(const Graph& g, int max_order) {
  require_connected(g);
  if (g.order() > max_order) {
    throw Error("leaf-degree search is limited to order <= " + std::to_string(max_order));
  }
}

}  // namespace

TreeOptimum min_leaf_degree_spanning_tree(const Graph& g, LeafDegreeMode mode) {
  check_leafdeg_input(g, kMaxLeafDegreeOrder);
  if (g.order() <= 2) {
    TreeWitness w = trivial_tree(g);
    return {w.leaf_degree, w};
  }
  LeafDegreeSearch search(g);
  if (mode == LeafDegreeMode::kKanekoAssisted) {
    // Below k + 1 <= worst ratio a violating subset rules the tree out.
    // The search starts there and only moves up if the certificate is
    // silent but no tree exists (K_3 at k = 1).
    const Ratio worst = worst_ratio_subset(g).second;
    for (int k = std::max(1, worst.num / worst.den);; ++k) {
      if (auto w = search.find(k)) return {w->leaf_degree, *w};
    }
  }
  TreeWitness best = best_greedy_tree(
      g, [](const TreeWitness& a, const TreeWitness& b) { return a.leaf_degree < b.leaf_degree; });
  for (int k = leaf_degree_lower_bound(g); k < best.leaf_degree; ++k) {
    if (auto w = search.find(k)) return {w->leaf_degree, *w};
  }
  return {best.leaf_degree, best};
}

LeafDegreeAnswer has_leafdeg_tree(const Graph& g, int k, LeafDegreeMode mode) {
  if (k < 1) throw Error("leaf-degree parameter k must be >= 1");
  const bool assisted = mode == LeafDegreeMode::kKanekoAssisted;
  check_leafdeg_input(g, assisted ? kMaxKanekoOrder : kMaxLeafDegreeOrder);
  if (g.order() <= 2) return {true, trivial_tree(g), std::nullopt};
  if (assisted) {
    KanekoResult cert = kaneko_check(g, k);
    if (!cert.has_tree) return {false, std::nullopt, cert.witness};
    if (g.order() > kMaxLeafDegreeOrder) return {true, std::nullopt, std::nullopt};
  }
  if (auto w = LeafDegreeSearch(g).find(k)) return {true, *w, std::nullopt};
  return {false, std::nullopt, std::nullopt};
}

}  // namespace spantree
