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
#include "spantree/constructions.hpp"
#include "spantree/kaneko.hpp"
#include "spantree/random.hpp"
#include "spantree/verify.hpp"

using namespace spantree;

TEST_CASE("examples") {
  const KanekoResult r = kaneko_check(star(4), 1);
  CHECK_FALSE(r.has_tree);
  REQUIRE(r.witness);
  CHECK(r.witness->s.mask == bit(0));
  CHECK(r.witness->isolated == 3);
  CHECK(r.witness->threshold == 2);
  CHECK(r.witness->format() == "S = {0}, i(G-S) = 3, (k+1)|S| = 2");
  for (int n = 1; n <= 15; ++n) {
    for (int k = 1; k <= 4; ++k) CHECK(kaneko_check(path(n), k).has_tree == (n != 3 || k >= 2));
  }
  for (int k = 1; k <= 4; ++k) {
    for (int n = k + 3; n <= 20; ++n) {
      const Graph g = leafdeg_extremal(n, k);
      const KanekoResult e = kaneko_check(g, k);
      CHECK_FALSE(e.has_tree);
      REQUIRE(e.witness);
      CHECK(e.witness->holds_in(g));
      if (n > k + 3) {
        CHECK(e.witness->s.mask == bit(0));
        CHECK(e.witness->isolated == k + 1);
      }
    }
  }
  for (int s = 1; s <= 3; ++s) {
    const int k = 1;
    const int n = (k + 2) * s + 4;
    const Graph g = fig2_family(n, k, s);
    const KanekoResult e = kaneko_check(g, k);
    CHECK_FALSE(e.has_tree);
    REQUIRE(e.witness);
    CHECK(e.witness->holds_in(g));
    CHECK(g.isolated_count(VertexSet{full_mask(s)}) == (k + 1) * s);
  }
  CHECK_THROWS_AS(kaneko_check(path(3), 0), Error);
  CHECK_THROWS_AS(kaneko_check(empty_graph(3), 1), Error);
  CHECK_THROWS_AS(kaneko_check(path(25), 1), Error);
}

TEST_CASE("agrees with brute-force subset search") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      for (int k = 1; k <= 3; ++k) {
        const KanekoResult r = kaneko_check(g, k);
        CHECK(r.has_tree == !oracle::has_violating_subset(g, k));
        if (r.witness) CHECK(r.witness->holds_in(g));
      }
    }
  }
}

TEST_CASE("sampled check never invents a witness") {
  Rng rng(3);
  Rng sample_rng(4);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(12, 0.25, rng);
    if (!g.is_connected()) continue;
    const int k = 1 + static_cast<int>(uniform_below(rng, 2));
    const KanekoResult exact = kaneko_check(g, k);
    const KanekoResult sampled = kaneko_check_sampled(g, k, sample_rng, 200);
    CHECK_FALSE(sampled.exhaustive);
    if (exact.has_tree) CHECK(sampled.has_tree);
    if (sampled.witness) CHECK(sampled.witness->holds_in(g));
  }
  Rng r2(1);
  CHECK_FALSE(kaneko_check_sampled(leafdeg_extremal(40, 2), 2, r2, 0).has_tree);
}

TEST_CASE("worst ratio subset") {
  for (int n = 3; n <= 10; ++n) {
    const auto [s, ratio] = worst_ratio_subset(complete(n));
    CHECK(ratio == Ratio{1, n - 1});
    CHECK(s.size() == n - 1);
    const auto [c, rs] = worst_ratio_subset(star(n));
    CHECK(c.mask == bit(0));
    CHECK(rs == Ratio{n - 1, 1});
  }
  const auto [hub, r] = worst_ratio_subset(leafdeg_extremal(10, 2));
  CHECK(hub.mask == bit(0));
  CHECK(r == Ratio{3, 1});
  for (const Graph& g : enumerate_connected(6)) {
    const Ratio worst = worst_ratio_subset(g).second;
    for (int k = 1; k <= 4; ++k) CHECK(kaneko_check(g, k).has_tree == (worst < Ratio{k + 1, 1}));
  }
}
