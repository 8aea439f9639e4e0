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

#include "spantree/closure.hpp"

#include <array>
#include <deque>

namespace spantree {

ClosureTrace closure(const Graph& g, int l) {
  if (l < 0) throw Error("closure threshold must be nonnegative");
  const int n = g.order();
  std::vector<Mask> adj(n);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) {
    adj[v] = g.row(v);
    deg[v] = popcount(adj[v]);
  }

  // queued[u] has bit v (u < v) while the pair sits in the worklist.
  std::array<Mask, kMaxOrder> queued{};
  std::deque<Edge> work;
  auto push = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    if (u == v || ((adj[u] >> v) & 1U) || ((queued[u] >> v) & 1U)) return;
    queued[u] |= bit(v);
    work.emplace_back(u, v);
  };
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) push(u, v);
  }

  ClosureTrace trace;
  trace.l = l;
  while (!work.empty()) {
    auto [u, v] = work.front();
    work.pop_front();
    queued[u] &= ~bit(v);
    if ((adj[u] >> v) & 1U) continue;
    const int sum = deg[u] + deg[v];
    if (sum < l) continue;
    adj[u] |= bit(v);
    adj[v] |= bit(u);
    ++deg[u];
    ++deg[v];
    trace.added.push_back({u, v, sum});
    for (int w = 0; w < n; ++w) {
      push(u, w);
      push(v, w);
    }
  }
  trace.result = Graph(n, adj);
  return trace;
}

bool is_closed(const Graph& g, int l) {
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    const Mask non = g.vertices() & ~g.row(u) & ~full_mask(u + 1);
    bool found = false;
    for_each_bit(non, [&](int v) { found = found || g.degree(u) + g.degree(v) >= l; });
    if (found) return false;
  }
  return true;
}

}  // namespace spantree
