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


#include "spantree/verify.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "spantree/bounds.hpp"
#include "spantree/closure.hpp"
#include "spantree/constructions.hpp"
#include "spantree/graph_io.hpp"
#include "spantree/kaneko.hpp"
#include "spantree/random.hpp"
#include "spantree/spectra.hpp"
#include "spantree/trees.hpp"

namespace spantree {

// ---------------------------------------------------------------------------
// Identifiers and parsing

namespace {

struct TheoremName {
  Theorem theorem;
  const char* id;
};

constexpr TheoremName kTheoremNames[] = {
    {Theorem::kT11, "T1.1"},     {Theorem::kT12, "T1.2"},     {Theorem::kT13i, "T1.3i"},
    {Theorem::kT13ii, "T1.3ii"}, {Theorem::kT13iii, "T1.3iii"}, {Theorem::kT13iv, "T1.3iv"},
    {Theorem::kT14, "T1.4"},     {Theorem::kT15a0, "T1.5a0"}, {Theorem::kT15a1, "T1.5a1"},
    {Theorem::kL21, "L2.1"},     {Theorem::kL22, "L2.2"},     {Theorem::kBounds, "bounds"},
};

int parse_int(const std::string& text, const char* what) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(std::string("bad ") + what + ": '" + text + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace

std::string theorem_id(Theorem t) {
  for (const auto& [theorem, id] : kTheoremNames) {
    if (theorem == t) return id;
  }
  throw Error("unknown theorem");
}

Theorem parse_theorem(const std::string& id) {
  for (const auto& [theorem, name] : kTheoremNames) {
    if (id == name) return theorem;
  }
  throw Error("unknown theorem id '" + id + "'");
}

bool theorem_uses_k(Theorem t) { return t != Theorem::kBounds; }

SourceSpec SourceSpec::parse(const std::string& text) {
  SourceSpec s;
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error("source must look like enum:N, file:PATH or random:N,P,COUNT,SEED");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  if (kind == "enum") {
    s.kind = Kind::kEnumerate;
    s.n = parse_int(rest, "order");
  } else if (kind == "file") {
    s.kind = Kind::kStream;
    if (rest.empty()) throw Error("empty source path");
    s.path = rest;
  } else if (kind == "random") {
    s.kind = Kind::kRandom;
    const auto parts = split(rest, ',');
    if (parts.size() != 4) throw Error("random source needs N,P,COUNT,SEED");
    s.n = parse_int(parts[0], "order");
    const char* end = parts[1].data() + parts[1].size();
    auto [ptr, ec] = std::from_chars(parts[1].data(), end, s.p);
    if (ec != std::errc() || ptr != end || !(s.p >= 0.0 && s.p <= 1.0)) {
      throw Error("edge probability must be in [0, 1]");
    }
    s.count = parse_int(parts[2], "count");
    const char* send = parts[3].data() + parts[3].size();
    auto [sptr, sec] = std::from_chars(parts[3].data(), send, s.seed);
    if (sec != std::errc() || sptr != send || parts[3].empty()) throw Error("bad seed '" + parts[3] + "'");
    if (s.n < 1 || s.n > 62) throw Error("random order must be in 1..62");
    if (s.count < 0) throw Error("count must be nonnegative");
  } else {
    throw Error("unknown source kind '" + kind + "'");
  }
  return s;
}

std::string SourceSpec::text() const {
  switch (kind) {
    case Kind::kEnumerate:
      return "enum:" + std::to_string(n);
    case Kind::kStream:
      return "file:" + path;
    case Kind::kRandom:
      return "random:" + std::to_string(n) + "," + format_double(p) + "," + std::to_string(count) + "," +
             std::to_string(seed);
  }
  return {};
}

std::vector<int> parse_k_list(const std::string& text) {
  std::vector<int> ks;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = parse_int(text.substr(0, dots), "k");
    const int hi = parse_int(text.substr(dots + 2), "k");
    if (lo > hi) throw Error("empty k range");
    for (int k = lo; k <= hi; ++k) ks.push_back(k);
  } else {
    for (const auto& part : split(text, ',')) ks.push_back(parse_int(part, "k"));
  }
  if (ks.empty()) throw Error("no k given");
  return ks;
}

// ---------------------------------------------------------------------------
// Single instances

namespace {

constexpr double kBoundarySlack = 1e-10;
constexpr double kBoundaryTol = 1e-12;

struct Comparison {
  bool holds = false;
  bool boundary = false;
};

// radius(g) >= threshold (at_least) or radius(g) <= threshold, re-deciding
// near-ties at tighter tolerance.
Comparison compare_radius(const Graph& g, MatrixKind kind, double threshold, bool at_least) {
  const double r = spectral_radius(g, kind).radius;
  if (std::abs(r - threshold) > kComparisonSlack) return {at_least ? r > threshold : r < threshold, false};
  const double fine = spectral_radius(g, kind, kBoundaryTol).radius;
  return {at_least ? fine >= threshold - kBoundarySlack : fine <= threshold + kBoundarySlack, true};
}

bool kended_within_cap(const Graph& g, int k) { return k >= g.order() - 1 || g.order() <= kMaxMinLeafOrder; }

// Existence of a spanning tree with at most k leaves; a returned witness
// that fails validation counts as absence so the instance is flagged.
bool kended(const Graph& g, int k) {
  const KEndedAnswer a = has_k_ended_tree(g, k);
  if (!a.exists) return false;
  return a.witness && validate_tree(g, *a.witness) && a.witness->leaf_count <= k;
}

bool leafdeg(const Graph& g, int k) {
  const LeafDegreeAnswer a = has_leafdeg_tree(g, k, LeafDegreeMode::kTreeSearchOnly);
  if (!a.exists) return false;
  return a.witness && validate_tree(g, *a.witness) && a.witness->leaf_degree <= k;
}

bool is_star_exception(const Graph& g, int k) {
  const int n = g.order();
  if (n != k + 2 || g.edge_count() != n - 1) return false;
  return g.max_degree() == n - 1;
}

bool near(double a, double b) { return std::abs(a - b) <= kComparisonSlack; }

using Status = InstanceOutcome::Status;

InstanceOutcome not_applicable() {
  InstanceOutcome o;
  o.status = Status::kNotApplicable;
  return o;
}

InstanceOutcome over_cap(InstanceOutcome o) {
  o.status = Status::kOverCap;
  return o;
}

}  // namespace

namespace {

InstanceOutcome check_instance_unguarded(Theorem t, const Graph& g, int k) {
  const int n = g.order();
  if (!g.is_connected()) return not_applicable();
  InstanceOutcome o;
  switch (t) {
    case Theorem::kT11: {
      if (k < 2) return not_applicable();
      o.hypothesis = degree_sum_condition(g, k);
      if (!o.hypothesis) return o;
      if (!kended_within_cap(g, k)) return over_cap(o);
      o.conclusion = kended(g, k);
      return o;
    }
    case Theorem::kT12: {
      if (k < 2 || k > n - 1) return not_applicable();
      o.hypothesis = true;
      if (!kended_within_cap(g, k)) return over_cap(o);
      o.conclusion = kended(g, k) == kended(closure(g, n - 1).result, k);
      return o;
    }
    case Theorem::kT13i:
    case Theorem::kT13ii: {
      if (k < 2 || n < k + 2) return not_applicable();
      const SpectralThresholds thr = main1_thresholds(n, k);
      const bool adj = t == Theorem::kT13i;
      o.in_regime = adj ? thr.rho_regime : thr.q_regime;
      const Comparison c = compare_radius(g, adj ? MatrixKind::adjacency() : MatrixKind::signless_laplacian(),
                                          adj ? thr.rho : thr.q, true);
      o.hypothesis = c.holds;
      o.boundary = c.boundary;
      if (!o.hypothesis) return o;
      if (recognize_kended_extremal(g, k)) {
        o.conclusion = true;
        return o;
      }
      if (!kended_within_cap(g, k)) return over_cap(o);
      o.conclusion = kended(g, k);
      return o;
    }
    case Theorem::kT13iii: {
      if (k < 2 || n < 2) return not_applicable();
      const Comparison c =
          compare_radius(g.complement(), MatrixKind::adjacency(), std::sqrt(static_cast<double>(k) * (n - 2)), false);
      o.hypothesis = c.holds;
      o.boundary = c.boundary;
      if (!o.hypothesis) return o;
      if (is_star_exception(g, k)) {
        o.conclusion = true;
        return o;
      }
      if (!kended_within_cap(g, k)) return over_cap(o);
      o.conclusion = kended(g, k);
      return o;
    }
    case Theorem::kT13iv: {
      if (k < 2 || n < 2) return not_applicable();
      const Comparison c = compare_radius(g.complement(), MatrixKind::signless_laplacian(), n + k - 2, false);
      o.boundary = c.boundary;
      o.hypothesis = c.holds && !in_regular_join_family(g, k);
      if (!o.hypothesis) return o;
      if (!kended_within_cap(g, k)) return over_cap(o);
      o.conclusion = kended(g, k);
      return o;
    }
    case Theorem::kT14: {
      if (k < 1) return not_applicable();
      o.hypothesis = true;
      if (n > kMaxLeafDegreeOrder) return over_cap(o);
      const KanekoResult cert = kaneko_check(g, k);
      if (!cert.has_tree && !(cert.witness && cert.witness->holds_in(g))) return o;
      o.conclusion = cert.has_tree == leafdeg(g, k);
      return o;
    }
    case Theorem::kT15a0:
    case Theorem::kT15a1: {
      if (k < 1 || n < k + 3) return not_applicable();
      const MatrixKind kind = t == Theorem::kT15a0 ? MatrixKind::adjacency() : MatrixKind::signless_laplacian();
      const LeafDegreeThreshold thr = leafdeg_threshold(n, k, kind);
      o.in_regime = thr.regime;
      const Comparison c = compare_radius(g, kind, thr.radius, true);
      o.hypothesis = c.holds;
      o.boundary = c.boundary;
      if (!o.hypothesis) return o;
      if (recognize_leafdeg_extremal(g, k)) {
        o.conclusion = true;
        return o;
      }
      if (n > kMaxLeafDegreeOrder) return over_cap(o);
      o.conclusion = leafdeg(g, k);
      return o;
    }
    case Theorem::kL21: {
      if (k < 2) return not_applicable();
      const EdgeThresholds thr = lemma_edge_thresholds(n, k);
      o.in_regime = thr.clique_regime;
      const Graph h = closure(g, n - 1).result;
      o.hypothesis = h.edge_count() >= thr.e_lemma21;
      if (!o.hypothesis) return o;
      o.conclusion = clique_number(h) >= n - k;
      return o;
    }
    case Theorem::kL22: {
      if (k < 2) return not_applicable();
      const EdgeThresholds thr = lemma_edge_thresholds(n, k);
      o.in_regime = thr.tree_regime;
      o.hypothesis = g.edge_count() >= thr.e_lemma22;
      if (!o.hypothesis) return o;
      if (recognize_kended_extremal(closure(g, n - 1).result, k)) {
        o.conclusion = true;
        return o;
      }
      if (!kended_within_cap(g, k)) return over_cap(o);
      o.conclusion = kended(g, k);
      return o;
    }
    case Theorem::kBounds: {
      if (n < 2) return not_applicable();
      o.hypothesis = true;
      const auto reports = spectral_bound_reports(g);
      bool ok = std::all_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.holds; });
      const bool tight_expected = is_regular(g) || is_semiregular_bipartite(g);
      ok = ok && near(reports[2].lhs, reports[2].rhs) == tight_expected;
      ok = ok && near(reports[3].lhs, reports[3].rhs) == tight_expected;
      o.conclusion = ok;
      return o;
    }
  }
  throw Error("unknown theorem");
}

}  // namespace

InstanceOutcome check_instance(Theorem t, const Graph& g, int k) {
  try {
    return check_instance_unguarded(t, g, k);
  } catch (const SearchLimit&) {
    InstanceOutcome o;
    o.status = Status::kOverCap;
    o.hypothesis = true;
    return o;
  }
}

// ---------------------------------------------------------------------------
// Sources

namespace {

constexpr int kMaxDrawsPerGraph = 100000;

std::optional<Graph> planted_graph(Theorem t, int n, int k) {
  switch (t) {
    case Theorem::kT13i:
    case Theorem::kT13ii:
    case Theorem::kL21:
    case Theorem::kL22:
      if (k >= 2 && n >= k + 2) return kended_extremal(n, k);
      return std::nullopt;
    case Theorem::kT15a0:
    case Theorem::kT15a1:
      if (k >= 1 && n >= k + 3) return leafdeg_extremal(n, k);
      return std::nullopt;
    case Theorem::kT13iii:
      if (k >= 2 && n == k + 2) return star(n);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace

std::vector<Graph> load_source(const SourceSpec& source, Theorem t, const std::vector<int>& ks) {
  std::vector<Graph> graphs;
  switch (source.kind) {
    case SourceSpec::Kind::kEnumerate:
      return enumerate_connected(source.n, source.allow_slow);
    case SourceSpec::Kind::kStream: {
      std::ifstream in(source.path);
      if (!in) throw Error("cannot open '" + source.path + "'");
      Graph6Stream stream(in);
      while (auto g = stream.next()) graphs.push_back(std::move(*g));
      return graphs;
    }
    case SourceSpec::Kind::kRandom: {
      if (source.plant) {
        for (int k : ks) {
          if (auto g = planted_graph(t, source.n, k)) {
            graphs.push_back(random_relabel(*g, source.seed ^ (0x9e3779b97f4a7c15ULL * (k + 1))));
          }
        }
      }
      Rng rng(source.seed);
      for (int i = 0; i < source.count; ++i) {
        int draws = 0;
        Graph g = random_graph(source.n, source.p, rng);
        while (!g.is_connected()) {
          if (++draws == kMaxDrawsPerGraph) throw Error("edge probability too low to sample connected graphs");
          g = random_graph(source.n, source.p, rng);
        }
        graphs.push_back(std::move(g));
      }
      return graphs;
    }
  }
  return graphs;
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

bool has_regime(Theorem t) {
  switch (t) {
    case Theorem::kT13i:
    case Theorem::kT13ii:
    case Theorem::kT15a0:
    case Theorem::kT15a1:
    case Theorem::kL21:
    case Theorem::kL22:
      return true;
    default:
      return false;
  }
}

struct Partial {
  long total = 0;
  long checked = 0;
  long not_applicable = 0;
  long over_cap = 0;
  long hypothesis = 0;
  long conclusion = 0;
  long boundary = 0;
  long in_regime = 0;
  long unconfirmed = 0;
  std::vector<std::pair<std::string, int>> counterexamples;

  void add(const Partial& o) {
    total += o.total;
    checked += o.checked;
    not_applicable += o.not_applicable;
    over_cap += o.over_cap;
    hypothesis += o.hypothesis;
    conclusion += o.conclusion;
    boundary += o.boundary;
    in_regime += o.in_regime;
    unconfirmed += o.unconfirmed;
    counterexamples.insert(counterexamples.end(), o.counterexamples.begin(), o.counterexamples.end());
  }
};

void run_instance(Theorem t, const Graph& g, int k, Partial& acc) {
  ++acc.total;
  const InstanceOutcome o = check_instance(t, g, k);
  if (o.boundary) ++acc.boundary;
  switch (o.status) {
    case InstanceOutcome::Status::kNotApplicable:
      ++acc.not_applicable;
      return;
    case InstanceOutcome::Status::kOverCap:
      ++acc.over_cap;
      return;
    case InstanceOutcome::Status::kChecked:
      break;
  }
  ++acc.checked;
  if (o.in_regime) ++acc.in_regime;
  if (!o.hypothesis) return;
  ++acc.hypothesis;
  if (o.conclusion) {
    ++acc.conclusion;
    return;
  }
  // Re-check the violation from its serialized form before reporting it.
  const std::string g6 = serialize_graph6(g);
  if (check_instance(t, parse_graph6(g6), k).violation()) {
    acc.counterexamples.emplace_back(g6, k);
  } else {
    ++acc.unconfirmed;
  }
}

std::string join_ks(const std::vector<int>& ks) {
  std::string out;
  for (std::size_t i = 0; i < ks.size(); ++i) out += (i ? "," : "") + std::to_string(ks[i]);
  return out;
}

}  // namespace

VerifyReport run_sweep(const SweepSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<int> ks = theorem_uses_k(spec.theorem) ? spec.ks : std::vector<int>{0};
  if (ks.empty()) throw Error("sweep needs at least one k");
  const std::vector<Graph> graphs = load_source(spec.source, spec.theorem, ks);

  int workers = spec.workers > 0 ? spec.workers : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min<int>(workers, static_cast<int>(graphs.size())));
  std::vector<Partial> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](int w) {
    try {
      for (std::size_t i = w; i < graphs.size(); i += workers) {
        for (int k : ks) run_instance(spec.theorem, graphs[i], k, parts[w]);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& th : threads) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Partial all;
  for (const auto& p : parts) all.add(p);
  std::sort(all.counterexamples.begin(), all.counterexamples.end());

  VerifyReport r;
  r.spec = spec;
  r.spec.ks = theorem_uses_k(spec.theorem) ? spec.ks : std::vector<int>{};
  r.total = all.total;
  r.checked = all.checked;
  r.skipped_not_applicable = all.not_applicable;
  r.skipped_over_cap = all.over_cap;
  r.hypothesis_held = all.hypothesis;
  r.conclusion_held = all.conclusion;
  r.boundary = all.boundary;
  r.in_regime = all.in_regime;
  r.unconfirmed = all.unconfirmed;
  for (const auto& [g6, k] : all.counterexamples) r.counterexamples.push_back(g6 + " " + std::to_string(k));
  if (spec.theorem == Theorem::kL21) {
    r.notes.push_back("order hypothesis checked is n >= 6k+5; the clique-count argument's second case quotes n >= 3k+5");
  }
  if (spec.theorem == Theorem::kT13iv) {
    r.notes.push_back("members of the regular-join exceptional family are excluded by degree structure");
  }
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

VerifyReport::Status VerifyReport::status() const {
  if (!counterexamples.empty()) return Status::kCounterexample;
  if (hypothesis_held == 0) return Status::kVacuous;
  return Status::kConfirmed;
}

std::string VerifyReport::status_word() const {
  switch (status()) {
    case Status::kConfirmed:
      return "confirmed";
    case Status::kCounterexample:
      return "counterexample";
    case Status::kVacuous:
      return "vacuous";
  }
  return {};
}

int VerifyReport::exit_code() const {
  switch (status()) {
    case Status::kConfirmed:
      return 0;
    case Status::kCounterexample:
      return 1;
    case Status::kVacuous:
      return 2;
  }
  return 2;
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  os << "theorem = " << theorem_id(spec.theorem) << '\n';
  os << "source = " << spec.source.text() << '\n';
  if (spec.source.kind == SourceSpec::Kind::kRandom) os << "planted = " << (spec.source.plant ? "yes" : "no") << '\n';
  os << "k = " << (spec.ks.empty() ? std::string("-") : join_ks(spec.ks)) << '\n';
  std::string regime = "unconditional";
  if (has_regime(spec.theorem)) {
    if (checked == 0) {
      regime = "none";
    } else if (in_regime == checked) {
      regime = "in";
    } else if (in_regime == 0) {
      regime = "outside (exploratory)";
    } else {
      regime = "mixed (" + std::to_string(in_regime) + " in)";
    }
  }
  os << "regime = " << regime << '\n';
  os << "total = " << total << '\n';
  os << "checked = " << checked << '\n';
  os << "skipped = " << skipped_not_applicable + skipped_over_cap << '\n';
  os << "skipped_not_applicable = " << skipped_not_applicable << '\n';
  os << "skipped_over_cap = " << skipped_over_cap << '\n';
  os << "hypothesis_held = " << hypothesis_held << '\n';
  os << "conclusion_held = " << conclusion_held << '\n';
  os << "boundary = " << boundary << '\n';
  os << "unconfirmed = " << unconfirmed << '\n';
  os << "counterexamples = " << counterexamples.size() << '\n';
  os << "status = " << status_word() << '\n';
  for (const auto& note : notes) os << "note = " << note << '\n';
  for (const auto& ce : counterexamples) os << "CE " << ce << '\n';
  return os.str();
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  os << text() << "elapsed_seconds = " << std::fixed << std::setprecision(3) << elapsed_seconds << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Extremal instances

bool TightnessReport::all_hold() const {
  return std::all_of(facts.begin(), facts.end(), [](const Fact& f) { return f.holds; });
}

std::string TightnessReport::text() const {
  std::ostringstream os;
  os << "family = " << family << '\n';
  os << "n = " << n << '\n';
  os << "k = " << k << '\n';
  os << "regime = " << (in_regime ? "in" : "outside") << '\n';
  for (const auto& f : facts) {
    os << (f.holds ? "holds" : "FAILS") << ": " << f.name;
    if (!f.detail.empty()) os << " (" << f.detail << ")";
    os << '\n';
  }
  return os.str();
}

namespace {

std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

Fact radius_matches(const std::string& label, const Graph& g, MatrixKind kind, double expected) {
  const SpectralReport r = spectral_radius(g, kind);
  return {label + " equals the quotient value", near(r.radius, expected),
          label + " = " + num(r.radius) + ", quotient = " + num(expected)};
}

TightnessReport kended_tightness(int n, int k) {
  TightnessReport rep;
  rep.family = "k-ended";
  rep.n = n;
  rep.k = k;
  const SpectralThresholds thr = main1_thresholds(n, k);
  rep.in_regime = thr.rho_regime && thr.q_regime;
  const Graph g = kended_extremal(n, k);
  const long want_edges = binomial2(n - k) + k;
  rep.facts.push_back({"e = C(n-k,2) + k", g.edge_count() == want_edges,
                       std::to_string(g.edge_count()) + " vs " + std::to_string(want_edges)});
  rep.facts.push_back(radius_matches("rho", g, MatrixKind::adjacency(), thr.rho));
  rep.facts.push_back(radius_matches("q", g, MatrixKind::signless_laplacian(), thr.q));
  const double r = rho(g);
  rep.facts.push_back({"rho > rho(K_{n-k}) = n-k-1", r > n - k - 1, num(r) + " > " + std::to_string(n - k - 1)});
  if (n <= kMaxMinLeafOrder) {
    const TreeOptimum best = min_leaf_spanning_tree(g);
    rep.facts.push_back({"fewest leaves over spanning trees = k+1", best.value == k + 1,
                         "minimum " + std::to_string(best.value)});
  }
  const KEndedAnswer ans = has_k_ended_tree(g, k);
  rep.facts.push_back({"no spanning k-ended tree", !ans.exists, ans.exists ? "a tree was found" : ""});
  rep.facts.push_back({"connected", g.is_connected(), ""});
  rep.facts.push_back({"(n-1)-closed", is_closed(g, n - 1), ""});
  return rep;
}

TightnessReport leafdeg_tightness(int n, int k) {
  TightnessReport rep;
  rep.family = "leaf-degree";
  rep.n = n;
  rep.k = k;
  const Graph g = leafdeg_extremal(n, k);
  const double rq = leafdeg_threshold(n, k, MatrixKind::adjacency()).radius;
  const double qq = leafdeg_threshold(n, k, MatrixKind::signless_laplacian()).radius;
  rep.in_regime = n >= 2 * k + 12;
  const KanekoResult cert = kaneko_check(g, k);
  const bool hub_witness = !cert.has_tree && cert.witness && cert.witness->s == VertexSet{bit(0)} &&
                           cert.witness->isolated == k + 1 && cert.witness->threshold == k + 1;
  rep.facts.push_back({"violating subset is the hub", hub_witness, cert.witness ? cert.witness->format() : "none"});
  if (n <= kMaxLeafDegreeOrder) {
    const TreeOptimum best = min_leaf_degree_spanning_tree(g, LeafDegreeMode::kTreeSearchOnly);
    rep.facts.push_back({"least leaf degree over spanning trees = k+1", best.value == k + 1,
                         "minimum " + std::to_string(best.value)});
  }
  rep.facts.push_back(radius_matches("rho", g, MatrixKind::adjacency(), rq));
  rep.facts.push_back(radius_matches("q", g, MatrixKind::signless_laplacian(), qq));
  const double r = rho(g);
  const double q = signless_radius(g);
  rep.facts.push_back({"rho > n-k-2", r > n - k - 2, num(r) + " > " + std::to_string(n - k - 2)});
  rep.facts.push_back({"q > 2(n-k-2)", q > 2 * (n - k - 2), num(q) + " > " + std::to_string(2 * (n - k - 2))});
  rep.facts.push_back({"connected", g.is_connected(), ""});
  return rep;
}

TightnessReport star_tightness(int n, int k) {
  if (n != k + 2) throw Error("the star boundary case has n = k + 2");
  TightnessReport rep;
  rep.family = "star";
  rep.n = n;
  rep.k = k;
  rep.in_regime = true;
  const Graph g = star(n);
  const double r = spectral_radius(g.complement(), MatrixKind::adjacency(), kBoundaryTol).radius;
  const double bound = std::sqrt(static_cast<double>(k) * (n - 2));
  rep.facts.push_back({"rho(complement) = k", std::abs(r - k) <= kBoundarySlack, num(r)});
  rep.facts.push_back({"sqrt(k(n-2)) = k", std::abs(bound - k) <= kBoundarySlack, num(bound)});
  rep.facts.push_back({"no spanning k-ended tree", !has_k_ended_tree(g, k).exists, ""});
  rep.facts.push_back({"connected", g.is_connected(), ""});
  return rep;
}

}  // namespace

TightnessReport check_extremal_tightness(TightFamily family, int n, int k) {
  switch (family) {
    case TightFamily::kKEnded:
      return kended_tightness(n, k);
    case TightFamily::kLeafDegree:
      return leafdeg_tightness(n, k);
    case TightFamily::kStar:
      return star_tightness(n, k);
  }
  throw Error("unknown family");
}

std::vector<FamilyMember> check_exceptional_family_iv(int n, int k) {
  std::vector<FamilyMember> out;
  if ((n + k) % 2 != 0) return out;
  const int half = (n + k) / 2;
  for (int t = std::max(half, 1); t <= n; ++t) {
    const int r = t - half;
    if ((t * r) % 2 != 0 || r >= t) continue;
    const Graph g = regular_join(n, k, t);
    FamilyMember m;
    m.t = t;
    m.r = r;
    m.graph6 = serialize_graph6(g);
    m.q_complement = signless_radius(g.complement());
    m.within_threshold = m.q_complement <= n + k - 2 + kComparisonSlack;
    m.connected = g.is_connected();
    if (m.connected && kended_within_cap(g, k)) m.has_tree = has_k_ended_tree(g, k).exists;
    out.push_back(std::move(m));
  }
  return out;
}

std::string format_family_iv(int n, int k, const std::vector<FamilyMember>& members) {
  std::ostringstream os;
  os << "n = " << n << '\n' << "k = " << k << '\n' << "threshold = " << n + k - 2 << '\n';
  os << "members = " << members.size() << '\n';
  for (const auto& m : members) {
    os << "t = " << m.t << ", r = " << m.r << ", q(complement) = " << num(m.q_complement)
       << ", within = " << (m.within_threshold ? "yes" : "no") << ", connected = " << (m.connected ? "yes" : "no")
       << ", tree = " << (m.has_tree ? (*m.has_tree ? "yes" : "no") : "unknown") << ", graph6 = " << m.graph6 << '\n';
  }
  return os.str();
}

}  // namespace spantree
