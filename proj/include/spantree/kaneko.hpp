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

#include <optional>
#include <string>
#include <utility>

#include "spantree/graph.hpp"
#include "spantree/random.hpp"

namespace spantree {

/// A nonempty S with i(G-S) >= (k+1)|S|, certifying that no spanning tree
/// of leaf degree <= k exists.
struct KanekoWitness {
  VertexSet s;
  int isolated = 0;
  int threshold = 0;

  /// Re-evaluates the witness against g.
  bool holds_in(const Graph& g) const;
  /// "S = {v...}, i(G-S) = x, (k+1)|S| = y"
  std::string format() const;
};

struct KanekoResult {
  /// True iff no violating subset was found.
  bool has_tree = true;
  std::optional<KanekoWitness> witness;
  /// False when only a sample of subsets was examined.
  bool exhaustive = true;
};

inline constexpr int kMaxKanekoOrder = 24;

/// Exhaustive search for a violating subset, by increasing |S| and then
/// increasing mask, so the first witness is a smallest one. Sizes with
/// n - |S| < (k+1)|S| cannot violate and are not enumerated.
/// Requires g connected, k >= 1, order <= 24.
KanekoResult kaneko_check(const Graph& g, int k);

/// Non-exhaustive variant for large graphs: all singletons, all pairs, every
/// closed neighbourhood boundary N(v), then `random_subsets` random sets.
KanekoResult kaneko_check_sampled(const Graph& g, int k, Rng& rng, int random_subsets);

/// i(G-S) / |S| as an exact fraction.
struct Ratio {
  int num = 0;
  int den = 1;
  double value() const { return static_cast<double>(num) / den; }
  friend bool operator==(const Ratio& a, const Ratio& b) {
    return static_cast<long>(a.num) * b.den == static_cast<long>(b.num) * a.den;
  }
  friend bool operator<(const Ratio& a, const Ratio& b) {
    return static_cast<long>(a.num) * b.den < static_cast<long>(b.num) * a.den;
  }
};

/// The nonempty S maximising i(G-S)/|S|; ties go to smaller |S|, then to
/// the numerically smaller mask. Order <= 24.
std::pair<VertexSet, Ratio> worst_ratio_subset(const Graph& g);

}  // namespace spantree
