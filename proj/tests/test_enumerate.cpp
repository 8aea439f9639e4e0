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

#include <set>

#include "oracles.hpp"
#include "spantree/constructions.hpp"
#include "spantree/random.hpp"
#include "spantree/verify.hpp"

using namespace spantree;

TEST_CASE("counts") {
  const std::size_t all[] = {1, 2, 4, 11, 34, 156, 1044};
  const std::size_t connected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CHECK(enumerate_all(n).size() == all[n - 1]);
    CHECK(enumerate_connected(n).size() == connected[n - 1]);
  }
  CHECK_THROWS_AS(enumerate_connected(8), Error);
  CHECK_THROWS_AS(enumerate_connected(0), Error);
}

TEST_CASE("triangle keys") {
  CHECK(triangle_key(Graph(3)) == 0u);
  CHECK(triangle_key(complete(3)) == 7u);
  // Pair 01 is the most significant bit.
  CHECK(triangle_key(Graph::from_edges(3, std::vector<Edge>{{0, 1}})) == 4u);
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(1 + static_cast<int>(uniform_below(rng, 11)), 0.5, rng);
    CHECK(from_triangle_key(g.order(), triangle_key(g)) == g);
    CHECK(canonical_key(g) == canonical_key(random_relabel(g, i)));
    CHECK(canonical_key(g) <= triangle_key(g));
  }
}

TEST_CASE("classes match brute force") {
  for (int n = 1; n <= 5; ++n) {
    const auto want = oracle::brute_connected_classes(n);
    std::set<std::vector<bool>> got;
    for (const Graph& g : enumerate_connected(n)) {
      CHECK(g.is_connected());
      got.insert(oracle::brute_canonical(g));
    }
    CHECK(got == want);
  }
}

TEST_CASE("enumeration is sorted canonical forms and matches reference files") {
  for (int n = 6; n <= 7; ++n) {
    const auto graphs = enumerate_connected(n);
    std::set<std::uint64_t> keys;
    std::uint64_t prev = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const std::uint64_t key = triangle_key(graphs[i]);
      CHECK(key == canonical_key(graphs[i]));
      if (i > 0) CHECK(prev < key);
      prev = key;
      keys.insert(key);
    }
    std::set<std::uint64_t> reference;
    for (const Graph& g : oracle::read_graph6_file(oracle::data_path("connected" + std::to_string(n) + ".g6"))) {
      reference.insert(canonical_key(g));
    }
    CHECK(reference == keys);
  }
}
