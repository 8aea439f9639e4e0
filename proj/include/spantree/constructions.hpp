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

#include <cstdint>

#include "spantree/graph.hpp"

namespace spantree {

Graph complete(int n);
Graph empty_graph(int n);
Graph complete_bipartite(int m, int n);
Graph path(int n);
Graph cycle(int n);
/// K_{1,n-1} with centre 0.
Graph star(int n);
Graph petersen();

/// h's vertices are relabelled to follow g's.
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

/// K_1 v (K_{n-k-1} + k K_1): hub 0, clique 1..n-k-1, pendants last.
/// Requires k >= 2 and n >= k + 2.
Graph kended_extremal(int n, int k);

/// K_1 v (K_{n-k-2} + (k+1) K_1): hub 0, clique next, pendants last.
/// Requires k >= 1 and n >= k + 3.
Graph leafdeg_extremal(int n, int k);

/// K_s v (K_{n-(k+2)s} + (k+1)s K_1). Requires k >= 1, s >= 1, n >= (k+2)s.
Graph fig2_family(int n, int k, int s);

/// Circulant r-regular graph on t vertices: i ~ i+-1..i+-floor(r/2), plus the
/// antipodal chord when r is odd.
Graph regular_graph(int t, int r);

/// R(t, t-(n+k)/2) v K_{n-t}, with the circulant as the regular part.
/// Requires n+k even and (n+k)/2 <= t <= n.
Graph regular_join(int n, int k, int t);

/// Structural membership tests, valid at any order.
bool recognize_kended_extremal(const Graph& g, int k);
bool recognize_leafdeg_extremal(const Graph& g, int k);

/// True iff g is some R(t, t-(n+k)/2) v K_{n-t} with (n+k)/2 <= t <= n,
/// decided by degree structure.
bool in_regular_join_family(const Graph& g, int k);

/// Uniformly random relabelling, reproducible from `seed`.
Graph random_relabel(const Graph& g, std::uint64_t seed);

}  // namespace spantree
