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


#include <doctest.h>

#include "oracles.hpp"
#include "spantree/closure.hpp"
#include "spantree/constructions.hpp"
#include "spantree/random.hpp"
#include "spantree/verify.hpp"

using namespace spantree;

TEST_CASE("closure examples") {
  // C_5 with l = 4: every nonadjacent pair has degree sum 4.
  const ClosureTrace t = closure(cycle(5), 4);
  CHECK(t.result == complete(5));
  CHECK(t.added.front().degree_sum == 4);
  CHECK(closure(path(4), 4).result == path(4));
  CHECK(closure(empty_graph(3), 0).result == complete(3));
  CHECK(closure(kended_extremal(17, 2), 16).result == kended_extremal(17, 2));
  CHECK_THROWS_AS(closure(path(3), -1), Error);
}

TEST_CASE("closure is order independent and closed") {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 14));
    const Graph g = random_graph(n, 0.35, rng);
    const int l = static_cast<int>(uniform_below(rng, 2 * n));
    const ClosureTrace t = closure(g, l);
    CHECK(t.result == oracle::naive_closure(g, l));
    CHECK(is_closed(t.result, l));
    CHECK(g.is_subgraph_of(t.result));
    CHECK(t.result.edge_count() == g.edge_count() + static_cast<int>(t.added.size()));
    CHECK(closure(t.result, l).added.empty());
  }
}

TEST_CASE("trace replays to the result") {
  for (const Graph& g : enumerate_connected(6)) {
    const ClosureTrace t = closure(g, 5);
    Graph h = g;
    for (const auto& j : t.added) {
      CHECK_FALSE(h.adjacent(j.u, j.v));
      CHECK(h.degree(j.u) + h.degree(j.v) == j.degree_sum);
      CHECK(j.degree_sum >= 5);
      h = h.with_edge(j.u, j.v);
    }
    CHECK(h == t.result);
  }
}
