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

#include "spantree/kaneko.hpp"

#include <algorithm>
#include <sstream>

namespace spantree {

bool KanekoWitness::holds_in(const Graph& g) const {
  if (s.empty() || (s.mask & ~g.vertices())) return false;
  const int iso = g.isolated_count(s);
  return iso == isolated && iso >= threshold;
}

std::string KanekoWitness::format() const {
  std::ostringstream os;
  os << "S = {";
  bool first = true;
  for (int v : s.members()) {
    os << (first ? "" : " ") << v;
    first = false;
  }
  os << "}, i(G-S) = " << isolated << ", (k+1)|S| = " << threshold;
  return os.str();
}

namespace {

void check_input(const Graph& g, int k) {
  if (k < 1) throw Error("leaf-degree parameter k must be >= 1");
  if (!g.is_connected()) throw Error("graph is not connected");
}

// Next larger mask with the same popcount (Gosper).
Mask next_same_size(Mask x) {
  const Mask c = x & (~x + 1);
  const Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

std::optional<KanekoWitness> test_subset(const Graph& g, int k, Mask s) {
  const int iso = popcount(g.isolated_after_removal(s));
  const int threshold = (k + 1) * popcount(s);
  if (iso >= threshold) return KanekoWitness{VertexSet{s}, iso, threshold};
  return std::nullopt;
}

}  // namespace

KanekoResult kaneko_check(const Graph& g, int k) {
  check_input(g, k);
  const int n = g.order();
  if (n > kMaxKanekoOrder) throw Error("exhaustive Kaneko check is limited to order <= 24");
  KanekoResult res;
  for (int size = 1; size <= n && n - size >= (k + 1) * size; ++size) {
    const Mask end = full_mask(n);
    for (Mask s = full_mask(size); s <= end && s != 0; s = next_same_size(s)) {
      if (auto w = test_subset(g, k, s)) {
        res.has_tree = false;
        res.witness = w;
        return res;
      }
      if (size == n) break;
    }
  }
  return res;
}

KanekoResult kaneko_check_sampled(const Graph& g, int k, Rng& rng, int random_subsets) {
  check_input(g, k);
  const int n = g.order();
  KanekoResult res;
  res.exhaustive = false;
  auto found = [&](Mask s) {
    if (s == 0) return false;
    if (auto w = test_subset(g, k, s)) {
      res.has_tree = false;
      res.witness = w;
      return true;
    }
    return false;
  };
  for (int u = 0; u < n; ++u) {
    if (found(bit(u))) return res;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (found(bit(u) | bit(v))) return res;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (found(g.row(v))) return res;
  }
  const int max_size = std::max(1, n / (k + 2));
  for (int i = 0; i < random_subsets; ++i) {
    const int size = 1 + static_cast<int>(uniform_below(rng, max_size));
    Mask s = 0;
    while (popcount(s) < size) s |= bit(static_cast<int>(uniform_below(rng, n)));
    if (found(s)) return res;
  }
  return res;
}

std::pair<VertexSet, Ratio> worst_ratio_subset(const Graph& g) {
  const int n = g.order();
  if (n > kMaxKanekoOrder) throw Error("worst-ratio search is limited to order <= 24");
  Mask best = 1;
  Ratio best_ratio{popcount(g.isolated_after_removal(1)), 1};
  const Mask end = full_mask(n);
  for (Mask s = 2; s <= end && s != 0; ++s) {
    const Ratio r{popcount(g.isolated_after_removal(s)), popcount(s)};
    if (best_ratio < r || (r == best_ratio && r.den < best_ratio.den)) {
      best = s;
      best_ratio = r;
    }
    if (s == end) break;
  }
  return {VertexSet{best}, best_ratio};
}

}  // namespace spantree
