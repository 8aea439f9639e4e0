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

#include <vector>

#include "spantree/graph.hpp"

namespace spantree {

struct ClosureJoin {
  int u = 0;
  int v = 0;
  /// d(u) + d(v) at the moment the edge was added.
  int degree_sum = 0;
};

struct ClosureTrace {
  int l = 0;
  std::vector<ClosureJoin> added;
  Graph result;
};

/// The l-closure: join nonadjacent pairs with degree sum >= l until none is
/// left. Pairs are scanned lexicographically; after a join only pairs
/// touching an endpoint are re-queued. l = 0 joins every pair.
ClosureTrace closure(const Graph& g, int l);

/// No nonadjacent pair has degree sum >= l.
bool is_closed(const Graph& g, int l);

}  // namespace spantree
