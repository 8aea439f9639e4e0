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


#include <algorithm>
#include <array>

#include "spantree/verify.hpp"

namespace spantree {

namespace {

constexpr int kMaxKeyOrder = 11;

int pair_count(int n) { return n * (n - 1) / 2; }

void check_key_order(int n) {
  if (n < 1 || n > kMaxKeyOrder) throw Error("triangle keys need 1 <= n <= 11");
}

// Largest triangle key over all relabelings, found by assigning new labels
// 0, 1, 2, ... in turn; each assignment fixes one more column of the key,
// so branches whose prefix falls behind the best key so far are cut.
class MaxKeySearch {
 public:
  MaxKeySearch(const Graph& g, bool stop_when_beaten)
      : g_(g), n_(g.order()), pairs_(pair_count(n_)), stop_(stop_when_beaten) {
    best_ = triangle_key(g);
  }

  std::uint64_t run() {
    dfs(0, 0, 0);
    return best_;
  }
  bool beaten() const { return beaten_; }

 private:
  std::uint64_t prefix_mask(int positions) const {
    if (positions == 0) return 0;
    const std::uint64_t ones = positions >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << positions) - 1;
    return ones << (pairs_ - positions);
  }

  void dfs(int j, Mask used, std::uint64_t key) {
    if (beaten_) return;
    if (j == n_) {
      if (key > best_) {
        best_ = key;
        beaten_ = stop_;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1U) continue;
      std::uint64_t next = key;
      int pos = j * (j - 1) / 2;
      for (int i = 0; i < j; ++i, ++pos) {
        if (g_.adjacent(sigma_[i], v)) next |= std::uint64_t{1} << (pairs_ - 1 - pos);
      }
      const std::uint64_t m = prefix_mask(j * (j + 1) / 2);
      if ((next & m) < (best_ & m)) continue;
      if ((next & m) > (best_ & m) && stop_) {
        beaten_ = true;
        return;
      }
      sigma_[j] = v;
      dfs(j + 1, used | bit(v), next);
      if (beaten_) return;
    }
  }

  const Graph& g_;
  int n_;
  int pairs_;
  bool stop_;
  bool beaten_ = false;
  std::uint64_t best_ = 0;
  std::array<int, kMaxKeyOrder> sigma_{};
};

std::uint64_t max_key(const Graph& g) { return MaxKeySearch(g, false).run(); }

bool is_max_canonical(const Graph& g) {
  MaxKeySearch search(g, true);
  search.run();
  return !search.beaten();
}

std::uint64_t key_mask(int n) {
  const int p = pair_count(n);
  return p == 0 ? 0 : (p >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p) - 1);
}

// Orderly generation: a key is kept only if no relabeling beats it, and
// clearing the last set bit of a kept key leaves a kept key, so growing
// kept keys by one bit past their last set bit reaches every class once.
void grow(int n, std::uint64_t key, int last, std::vector<std::uint64_t>& out) {
  out.push_back(key);
  const int pairs = pair_count(n);
  for (int pos = last + 1; pos < pairs; ++pos) {
    const std::uint64_t child = key | (std::uint64_t{1} << (pairs - 1 - pos));
    if (is_max_canonical(from_triangle_key(n, child))) grow(n, child, pos, out);
  }
}

std::vector<Graph> enumerate(int n, bool allow_slow, bool connected_only) {
  const int cap = allow_slow ? kMaxSlowEnumerationOrder : kMaxEnumerationOrder;
  if (n < 1 || n > cap) {
    throw Error("internal enumeration supports 1 <= n <= " + std::to_string(cap));
  }
  std::vector<std::uint64_t> max_keys;
  grow(n, 0, -1, max_keys);
  // The smallest key of a class is the complement of the largest key of
  // the complementary class.
  std::vector<std::uint64_t> keys;
  for (std::uint64_t k : max_keys) {
    const std::uint64_t min_key = ~k & key_mask(n);
    if (!connected_only || from_triangle_key(n, min_key).is_connected()) keys.push_back(min_key);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<Graph> out;
  out.reserve(keys.size());
  for (std::uint64_t k : keys) out.push_back(from_triangle_key(n, k));
  return out;
}

}  // namespace

std::uint64_t triangle_key(const Graph& g) {
  const int n = g.order();
  check_key_order(n);
  const int pairs = pair_count(n);
  std::uint64_t key = 0;
  int pos = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++pos) {
      if (g.adjacent(i, j)) key |= std::uint64_t{1} << (pairs - 1 - pos);
    }
  }
  return key;
}

Graph from_triangle_key(int n, std::uint64_t key) {
  check_key_order(n);
  if (key & ~key_mask(n)) throw Error("triangle key has bits beyond the order");
  const int pairs = pair_count(n);
  std::vector<Edge> edges;
  int pos = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++pos) {
      if ((key >> (pairs - 1 - pos)) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

std::uint64_t canonical_key(const Graph& g) {
  check_key_order(g.order());
  return ~max_key(g.complement()) & key_mask(g.order());
}

std::vector<Graph> enumerate_connected(int n, bool allow_slow) { return enumerate(n, allow_slow, true); }

std::vector<Graph> enumerate_all(int n, bool allow_slow) { return enumerate(n, allow_slow, false); }

}  // namespace spantree
