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
#include <optional>
#include <string>
#include <vector>

#include "spantree/graph.hpp"

namespace spantree {

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr int kMaxEnumerationOrder = 7;
inline constexpr int kMaxSlowEnumerationOrder = 8;

/// Upper triangle read column by column (01, 02, 12, 03, ...) packed with
/// the first pair in the most significant used bit, so integer order is
/// lexicographic order of the bit string. Order <= 11.
std::uint64_t triangle_key(const Graph& g);
Graph from_triangle_key(int n, std::uint64_t key);

/// Lexicographically smallest triangle key over all relabelings.
std::uint64_t canonical_key(const Graph& g);

/// One graph per isomorphism class of connected graphs on n vertices, each
/// the relabeling with the smallest triangle key, sorted by that key.
/// 1 <= n <= 7, or n = 8 with allow_slow.
std::vector<Graph> enumerate_connected(int n, bool allow_slow = false);

/// Same for all graphs on n vertices, connected or not.
std::vector<Graph> enumerate_all(int n, bool allow_slow = false);

// ---------------------------------------------------------------------------
// Sweeps

enum class Theorem {
  kT11,
  kT12,
  kT13i,
  kT13ii,
  kT13iii,
  kT13iv,
  kT14,
  kT15a0,
  kT15a1,
  kL21,
  kL22,
  kBounds,
};

std::string theorem_id(Theorem t);
/// "T1.1", ..., "L2.2", "bounds".
Theorem parse_theorem(const std::string& id);
/// False for the bounds sweep, which ignores k.
bool theorem_uses_k(Theorem t);

struct SourceSpec {
  enum class Kind { kEnumerate, kStream, kRandom };
  Kind kind = Kind::kEnumerate;
  int n = 0;
  std::string path;
  double p = 0.5;
  int count = 0;
  std::uint64_t seed = 0;
  /// Random sources also carry one relabeled extremal graph per k for the
  /// theorems that have one, ahead of the samples.
  bool plant = true;
  bool allow_slow = false;

  /// "enum:N", "file:PATH" or "random:N,P,COUNT,SEED".
  static SourceSpec parse(const std::string& text);
  std::string text() const;
};

struct SweepSpec {
  SourceSpec source;
  Theorem theorem = Theorem::kT14;
  std::vector<int> ks;
  /// 0 means one per hardware thread.
  int workers = 0;
};

/// "3", "1..3" or "2,4,6".
std::vector<int> parse_k_list(const std::string& text);

/// Result of checking one (graph, k) instance.
struct InstanceOutcome {
  enum class Status { kChecked, kNotApplicable, kOverCap };
  Status status = Status::kChecked;
  bool in_regime = true;
  bool hypothesis = false;
  bool conclusion = false;
  /// A spectral comparison fell within slack of its threshold and was
  /// decided at tighter tolerance.
  bool boundary = false;
  bool violation() const { return status == Status::kChecked && hypothesis && !conclusion; }
};

InstanceOutcome check_instance(Theorem t, const Graph& g, int k);

struct VerifyReport {
  SweepSpec spec;
  long total = 0;
  long checked = 0;
  long skipped_not_applicable = 0;
  long skipped_over_cap = 0;
  long hypothesis_held = 0;
  long conclusion_held = 0;
  long boundary = 0;
  long in_regime = 0;
  /// Violations that did not reproduce after a graph6 round trip.
  long unconfirmed = 0;
  /// "<graph6> <k>", sorted.
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;
  double elapsed_seconds = 0.0;

  enum class Status { kConfirmed, kCounterexample, kVacuous };
  Status status() const;
  std::string status_word() const;
  /// 0 confirmed, 1 counterexample, 2 vacuous.
  int exit_code() const;
  /// key = value lines, then "CE <graph6> <k>" lines. Deterministic.
  std::string text() const;
  /// text() plus the elapsed time.
  std::string summary() const;
};

/// Loads the source graphs (with planted extremal graphs, when enabled).
std::vector<Graph> load_source(const SourceSpec& source, Theorem t, const std::vector<int>& ks);

VerifyReport run_sweep(const SweepSpec& spec);

// ---------------------------------------------------------------------------
// Extremal instances

struct Fact {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct TightnessReport {
  std::string family;
  int n = 0;
  int k = 0;
  bool in_regime = false;
  std::vector<Fact> facts;

  bool all_hold() const;
  std::string text() const;
};

enum class TightFamily { kKEnded, kLeafDegree, kStar };

/// Checks that the extremal graph meets its threshold exactly, is
/// connected, lacks the tree in question, and (k-ended) is (n-1)-closed.
/// The star family is K_{1,k+1}; n must be k + 2.
TightnessReport check_extremal_tightness(TightFamily family, int n, int k);

struct FamilyMember {
  int t = 0;
  int r = 0;
  std::string graph6;
  double q_complement = 0.0;
  bool within_threshold = false;
  bool connected = false;
  /// Unset when disconnected or beyond the exact solver.
  std::optional<bool> has_tree;
};

/// Every R(t, r) joined with K_{n-t}, r = t - (n+k)/2, over the feasible t.
/// Empty when n + k is odd.
std::vector<FamilyMember> check_exceptional_family_iv(int n, int k);
std::string format_family_iv(int n, int k, const std::vector<FamilyMember>& members);

}  // namespace spantree
