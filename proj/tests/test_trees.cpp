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
#include "spantree/random.hpp"
#include "spantree/trees.hpp"
#include "spantree/verify.hpp"

using namespace spantree;

namespace {

constexpr LeafDegreeMode kSearch = LeafDegreeMode::kTreeSearchOnly;

}  // namespace

TEST_CASE("tree witness formatting and validation") {
  const TreeWitness w = TreeWitness::from_edges(4, {{0, 1}, {1, 2}, {1, 3}});
  CHECK(w.leaf_count == 3);
  CHECK(w.leaf_degree == 3);
  CHECK(w.format() == "root: 0; parents: 0 0 1 1");
  CHECK(validate_tree(star(4).relabeled(std::vector<int>{1, 0, 2, 3}), w));
  CHECK_FALSE(validate_tree(path(4), w));
  CHECK_THROWS_AS(TreeWitness::from_edges(4, {{0, 1}, {1, 2}, {0, 2}}), Error);
  const TreeWitness one = TreeWitness::from_edges(1, {});
  CHECK(one.leaf_count == 0);
  CHECK(one.leaf_degree == 0);
  const TreeWitness two = TreeWitness::from_edges(2, {{0, 1}});
  CHECK(two.leaf_count == 2);
  CHECK(two.leaf_degree == 1);
}

TEST_CASE("small examples") {
  for (int n = 2; n <= 12; ++n) CHECK(min_leaf_spanning_tree(complete(n)).value == 2);
  for (int n = 3; n <= 12; ++n) CHECK(min_leaf_spanning_tree(star(n)).value == n - 1);
  CHECK(min_leaf_spanning_tree(petersen()).value == 2);
  CHECK(has_k_ended_tree(path(7), 2).exists);
  for (int k = 2; k <= 6; ++k) CHECK_FALSE(has_k_ended_tree(star(k + 2), k).exists);
  CHECK_FALSE(has_k_ended_tree(kended_extremal(12, 3), 3).exists);
  const KEndedAnswer yes = has_k_ended_tree(kended_extremal(12, 3), 4);
  REQUIRE(yes.exists);
  REQUIRE(yes.witness);
  CHECK(validate_tree(kended_extremal(12, 3), *yes.witness));
  CHECK(yes.witness->leaf_count <= 4);
  CHECK_THROWS_AS(has_k_ended_tree(disjoint_union(path(2), path(2)), 2), Error);
  CHECK_THROWS_AS(has_k_ended_tree(path(3), 1), Error);

  for (int n = 4; n <= 12; ++n) CHECK(min_leaf_degree_spanning_tree(path(n)).value == 1);
  CHECK(min_leaf_degree_spanning_tree(path(3)).value == 2);
  CHECK(min_leaf_degree_spanning_tree(star(4)).value == 3);
  CHECK(min_leaf_degree_spanning_tree(Graph(1)).value == 0);
  CHECK(min_leaf_degree_spanning_tree(path(2)).value == 1);
  for (int n = 4; n <= 12; ++n) CHECK(has_leafdeg_tree(cycle(n), 1, kSearch).exists);
  // Every spanning tree of K_3 is P_3, yet no subset violates the count.
  CHECK(kaneko_check(complete(3), 1).has_tree);
  const LeafDegreeAnswer k3 = has_leafdeg_tree(complete(3), 1);
  CHECK_FALSE(k3.exists);
  CHECK_FALSE(k3.certificate);
  CHECK(min_leaf_degree_spanning_tree(complete(3)).value == 2);
  const LeafDegreeAnswer no = has_leafdeg_tree(star(4), 1);
  CHECK_FALSE(no.exists);
  REQUIRE(no.certificate);
  CHECK(no.certificate->holds_in(star(4)));
  CHECK_FALSE(has_leafdeg_tree(star(4), 1, kSearch).exists);
}

TEST_CASE("extremal families") {
  for (int k = 2; k <= 5; ++k) {
    for (int n = k + 2; n <= 16; ++n) {
      const TreeOptimum t = min_leaf_spanning_tree(kended_extremal(n, k));
      CHECK(t.value == k + 1);
      CHECK(validate_tree(kended_extremal(n, k), t.witness));
    }
  }
  for (int k = 1; k <= 3; ++k) {
    CHECK(min_leaf_degree_spanning_tree(leafdeg_extremal(k + 3, k)).value == k + 2);
    for (int n = k + 4; n <= 14; ++n) {
      const Graph g = leafdeg_extremal(n, k);
      const TreeOptimum t = min_leaf_degree_spanning_tree(g, kSearch);
      CHECK(t.value == k + 1);
      CHECK(t.witness.leaf_degree == k + 1);
      CHECK(validate_tree(g, t.witness));
      CHECK(min_leaf_degree_spanning_tree(g).value == k + 1);
    }
  }
}

TEST_CASE("hamilton paths") {
  const auto p = hamiltonian_path(petersen());
  REQUIRE(p);
  CHECK(p->size() == 10u);
  for (std::size_t i = 0; i + 1 < p->size(); ++i) CHECK(petersen().adjacent((*p)[i], (*p)[i + 1]));
  CHECK_FALSE(hamiltonian_path(star(4)));
  CHECK_FALSE(hamiltonian_path(complete_bipartite(3, 5)));
  CHECK(hamiltonian_path(complete_bipartite(3, 4)));
  CHECK_THROWS_AS(hamiltonian_path(complete(18)), Error);
}

TEST_CASE("exact values agree with brute-force tree enumeration") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const oracle::TreeStats want = oracle::tree_stats(g);
      const TreeOptimum leaves = min_leaf_spanning_tree(g);
      CHECK(leaves.value == want.min_leaves);
      CHECK(validate_tree(g, leaves.witness));
      const TreeOptimum ld = min_leaf_degree_spanning_tree(g, kSearch);
      CHECK(ld.value == want.min_leaf_degree);
      CHECK(validate_tree(g, ld.witness));
      CHECK(min_leaf_degree_spanning_tree(g).value == want.min_leaf_degree);
      for (int k = 1; k <= n; ++k) {
        CHECK(has_leafdeg_tree(g, k).exists == (want.min_leaf_degree <= k));
        if (k >= 2) CHECK(has_k_ended_tree(g, k).exists == (want.min_leaves <= k));
      }
    }
  }
}

TEST_CASE("random graphs agree with brute force") {
  Rng rng(5);
  int tested = 0;
  while (tested < 60) {
    const Graph g = random_graph(7 + static_cast<int>(uniform_below(rng, 2)), 0.3, rng);
    if (!g.is_connected()) continue;
    ++tested;
    const oracle::TreeStats want = oracle::tree_stats(g);
    CHECK(min_leaf_spanning_tree(g).value == want.min_leaves);
    CHECK(min_leaf_degree_spanning_tree(g, kSearch).value == want.min_leaf_degree);
    CHECK(min_leaf_degree_spanning_tree(g).value == want.min_leaf_degree);
  }
}

TEST_CASE("larger random graphs: witnesses and monotonicity") {
  Rng rng(77);
  int tested = 0;
  while (tested < 40) {
    const int n = 12 + static_cast<int>(uniform_below(rng, 9));
    const Graph g = random_graph(n, 0.15 + 0.1 * static_cast<double>(uniform_below(rng, 3)), rng);
    if (!g.is_connected()) continue;
    ++tested;
    const TreeOptimum t = min_leaf_spanning_tree(g);
    CHECK(validate_tree(g, t.witness));
    CHECK(t.witness.leaf_count == t.value);
    if (t.value > 2) CHECK_FALSE(has_k_ended_tree(g, t.value - 1).exists);
    CHECK(has_k_ended_tree(g, t.value).exists);
    CHECK(has_k_ended_tree(g, t.value + 1).exists);
  }
}

TEST_CASE("caps and limits") {
  CHECK_THROWS_AS(min_leaf_spanning_tree(cycle(21)), Error);
  CHECK(has_k_ended_tree(cycle(30), 29).exists);
  CHECK_THROWS_AS(min_leaf_degree_spanning_tree(cycle(17), kSearch), Error);
  CHECK(has_leafdeg_tree(leafdeg_extremal(20, 2), 2).exists == false);
  CHECK_THROWS_AS(has_leafdeg_tree(leafdeg_extremal(20, 2), 3, kSearch), Error);
  CHECK_THROWS_AS(min_leaf_degree_spanning_tree(fig2_family(16, 1, 2), kSearch), SearchLimit);
}
