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

#include <cmath>

#include "eigen_oracle.hpp"
#include "spantree/bounds.hpp"
#include "spantree/constructions.hpp"
#include "spantree/random.hpp"
#include "spantree/verify.hpp"

using namespace spantree;

TEST_CASE("formula examples") {
  for (int n = 2; n <= 12; ++n) {
    CHECK(hong_upper(complete(n)) == doctest::Approx(n - 1).epsilon(1e-12));
    CHECK(q_upper(complete(n)) == doctest::Approx(2 * n - 2).epsilon(1e-12));
    CHECK(q_upper(star(n)) == doctest::Approx(n).epsilon(1e-12));
    CHECK(q_upper(star(n)) == doctest::Approx(signless_radius(star(n))).epsilon(1e-9));
  }
  CHECK(hong_upper(cycle(5)) == doctest::Approx(std::sqrt(6.0)));
  CHECK(rho_lower_edges(path(4)) == doctest::Approx(std::sqrt(2.0)));
  CHECK(rho_lower_edges(petersen()) == doctest::Approx(3.0));
  CHECK(q_lower_edges(petersen()) == doctest::Approx(6.0));
  CHECK(rho_lower_edges(complete_bipartite(2, 5)) == doctest::Approx(std::sqrt(10.0)));
  CHECK(q_lower_edges(complete_bipartite(2, 5)) == doctest::Approx(7.0));
  CHECK_THROWS_AS(rho_lower_edges(empty_graph(3)), Error);
  CHECK_THROWS_AS(q_upper(Graph(1)), Error);
}

TEST_CASE("degree sum condition") {
  CHECK(degree_sum_condition(complete(6), 2));
  for (int k = 2; k <= 5; ++k) {
    for (int n = k + 2; n <= 15; ++n) CHECK_FALSE(degree_sum_condition(kended_extremal(n, k), k));
  }
  CHECK(degree_sum_condition(cycle(5), 2));
  CHECK_FALSE(degree_sum_condition(cycle(6), 2));
}

TEST_CASE("regularity recognizers") {
  CHECK(is_regular(petersen()));
  CHECK_FALSE(is_regular(path(3)));
  CHECK(is_semiregular_bipartite(complete_bipartite(2, 5)));
  CHECK(is_semiregular_bipartite(cycle(6)));
  CHECK_FALSE(is_semiregular_bipartite(cycle(5)));
  CHECK_FALSE(is_semiregular_bipartite(path(4)));
  CHECK_FALSE(is_semiregular_bipartite(disjoint_union(path(2), path(2))));
}

TEST_CASE("bounds hold on every small connected graph, with equality characterized") {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      const auto reports = spectral_bound_reports(g);
      REQUIRE(reports.size() == 4u);
      for (const BoundReport& b : reports) CHECK(b.holds);
      const double rho_dense = oracle::dense_radius(g, 0.0);
      const double q_dense = oracle::dense_radius(g, 1.0);
      CHECK(reports[0].lhs == doctest::Approx(rho_dense).epsilon(1e-9));
      CHECK(reports[1].lhs == doctest::Approx(q_dense).epsilon(1e-9));
      const bool equal_case = is_regular(g) || is_semiregular_bipartite(g);
      CHECK((std::abs(reports[2].slack) <= 1e-8) == equal_case);
      CHECK((std::abs(reports[3].slack) <= 1e-8) == equal_case);
    }
  }
}

TEST_CASE("thresholds") {
  const SpectralThresholds t = main1_thresholds(17, 2);
  CHECK(t.rho_bar == doctest::Approx(std::sqrt(30.0)).epsilon(1e-14));
  CHECK(t.q_bar == 17.0);
  CHECK(t.rho > 14.0);
  CHECK(t.rho == doctest::Approx(rho(kended_extremal(17, 2))).epsilon(1e-10));
  CHECK(t.q == doctest::Approx(oracle::dense_radius(kended_extremal(17, 2), 1.0)).epsilon(1e-10));
  CHECK(t.rho_regime);
  CHECK(t.q_regime);
  CHECK_FALSE(main1_thresholds(16, 2).rho_regime);
  // 3k^2/2 + 3k/2 + 2 = 20 at k = 3 and 6k + 5 = 23.
  CHECK(main1_thresholds(23, 3).q_regime);
  CHECK_FALSE(main1_thresholds(22, 3).q_regime);
  // k = 6: k^2 + 3k/2 + 2 = 47 beats 6k + 5 = 41.
  CHECK_FALSE(main1_thresholds(46, 6).rho_regime);
  CHECK(main1_thresholds(47, 6).rho_regime);
  CHECK_THROWS_AS(main1_thresholds(10, 1), Error);

  const EdgeThresholds e = lemma_edge_thresholds(17, 2);
  CHECK(e.e_lemma21 == 98);
  CHECK(e.e_lemma22 == 98);
  CHECK(e.clique_regime);
  CHECK(e.tree_regime);
  CHECK(lemma_edge_thresholds(19, 2).e_lemma21 == 127);
  CHECK(kended_extremal(17, 2).edge_count() >= e.e_lemma22);
  for (int k = 2; k <= 6; ++k) {
    for (int n = std::max(6 * k + 5, k * k + k + 2); n <= 64; ++n) {
      CHECK(kended_extremal(n, k).edge_count() >= lemma_edge_thresholds(n, k).e_lemma22);
    }
  }
  CHECK_FALSE(lemma_edge_thresholds(16, 2).clique_regime);

  const LeafDegreeThreshold l = leafdeg_threshold(14, 1, MatrixKind::adjacency());
  CHECK(l.regime);
  CHECK(l.radius == doctest::Approx(rho(leafdeg_extremal(14, 1))).epsilon(1e-10));
  CHECK_FALSE(leafdeg_threshold(13, 1, MatrixKind::adjacency()).regime);
  CHECK(binomial2(14) == 91);
  CHECK(binomial2(1) == 0);
}
