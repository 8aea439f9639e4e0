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


#include "spantree/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "spantree/bounds.hpp"
#include "spantree/closure.hpp"
#include "spantree/constructions.hpp"
#include "spantree/graph_io.hpp"
#include "spantree/kaneko.hpp"
#include "spantree/spectra.hpp"
#include "spantree/trees.hpp"
#include "spantree/verify.hpp"

namespace spantree {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(15) << x;
  return os.str();
}

class Input {
 public:
  Input(std::istream& fallback, const std::string& path) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
    } else {
      file_.open(path);
      if (!file_) throw Error("cannot open '" + path + "'");
      stream_ = &file_;
    }
  }
  std::istream& stream() { return *stream_; }

  std::vector<Graph> graphs() {
    std::vector<Graph> out;
    Graph6Stream s(*stream_);
    while (auto g = s.next()) out.push_back(std::move(*g));
    if (out.empty()) throw Error("no input graph");
    return out;
  }

  std::string all_text() {
    std::ostringstream os;
    os << stream_->rdbuf();
    return os.str();
  }

 private:
  std::ifstream file_;
  std::istream* stream_ = nullptr;
};

std::map<std::string, int> parse_params(const std::string& text) {
  std::map<std::string, int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("parameter '" + item + "' is not name=value");
    try {
      std::size_t used = 0;
      const std::string value = item.substr(eq + 1);
      out[item.substr(0, eq)] = std::stoi(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::logic_error&) {
      throw Error("parameter '" + item + "' needs an integer value");
    }
  }
  return out;
}

int param(const std::map<std::string, int>& params, const std::string& name) {
  const auto it = params.find(name);
  if (it == params.end()) throw Error("missing parameter '" + name + "'");
  return it->second;
}

Graph construct(const std::string& family, const std::map<std::string, int>& p) {
  if (family == "kn") return complete(param(p, "n"));
  if (family == "kmn") return complete_bipartite(param(p, "m"), param(p, "n"));
  if (family == "path") return path(param(p, "n"));
  if (family == "cycle") return cycle(param(p, "n"));
  if (family == "star") return star(param(p, "n"));
  if (family == "petersen") return petersen();
  if (family == "kended-ext") return kended_extremal(param(p, "n"), param(p, "k"));
  if (family == "leafdeg-ext") return leafdeg_extremal(param(p, "n"), param(p, "k"));
  if (family == "fig2") return fig2_family(param(p, "n"), param(p, "k"), param(p, "s"));
  if (family == "regular") return regular_graph(param(p, "t"), param(p, "r"));
  if (family == "regular-join") return regular_join(param(p, "n"), param(p, "k"), param(p, "t"));
  throw Error("unknown family '" + family + "'");
}

struct Options {
  std::string in_path;
  std::string kind = "adj";
  double tol = kDefaultSpectralTol;
  bool verbose = false;
  int l = 0;
  bool trace = false;
  int k = 0;
  bool witness = false;
  std::string mode = "assisted";
  std::string family;
  std::string params;
  std::string format = "g6";
  bool all = false;
  bool thresholds = false;
  int n = 0;
  std::string theorem;
  std::string source;
  std::string ks;
  int workers = 0;
  std::string summary;
  bool no_plant = false;
  bool slow = false;
  std::string tightness;
  bool family_iv = false;
  std::string from = "g6";
  std::string to = "g6";
};

void print_tree(std::ostream& out, const TreeWitness& w) {
  out << "leaves: " << w.leaf_count << "; leaf degree: " << w.leaf_degree << '\n';
  out << w.format() << '\n';
}

int run_spectra(const Options& o, Input& in, std::ostream& out) {
  const MatrixKind kind = MatrixKind::parse(o.kind);
  if (!(o.tol > 0.0)) throw Error("tolerance must be positive");
  for (const Graph& g : in.graphs()) {
    const SpectralReport r = spectral_radius(g, kind, o.tol);
    out << fmt(r.radius) << '\n';
    if (o.verbose) {
      out << "kind: " << kind.name() << "; residual: " << fmt(r.residual) << "; iterations: " << r.iterations << '\n';
    }
  }
  return 0;
}

int run_closure(const Options& o, Input& in, std::ostream& out) {
  for (const Graph& g : in.graphs()) {
    const ClosureTrace t = closure(g, o.l);
    out << serialize_graph6(t.result) << '\n';
    if (o.trace) {
      for (const auto& j : t.added) out << "join " << j.u << ' ' << j.v << " (degree sum " << j.degree_sum << ")\n";
    }
  }
  return 0;
}

int run_kended(const Options& o, Input& in, std::ostream& out) {
  for (const Graph& g : in.graphs()) {
    const KEndedAnswer a = has_k_ended_tree(g, o.k);
    out << (a.exists ? "true" : "false") << '\n';
    if (o.witness && a.witness) print_tree(out, *a.witness);
  }
  return 0;
}

LeafDegreeMode parse_mode(const std::string& mode) {
  if (mode == "assisted") return LeafDegreeMode::kKanekoAssisted;
  if (mode == "search") return LeafDegreeMode::kTreeSearchOnly;
  throw Error("mode must be 'assisted' or 'search'");
}

int run_leafdeg(const Options& o, Input& in, std::ostream& out) {
  const LeafDegreeMode mode = parse_mode(o.mode);
  for (const Graph& g : in.graphs()) {
    const LeafDegreeAnswer a = has_leafdeg_tree(g, o.k, mode);
    out << (a.exists ? "true" : "false") << '\n';
    if (!o.witness) continue;
    if (a.witness) print_tree(out, *a.witness);
    if (a.certificate) out << a.certificate->format() << '\n';
  }
  return 0;
}

int run_kaneko(const Options& o, Input& in, std::ostream& out) {
  for (const Graph& g : in.graphs()) {
    const KanekoResult r = kaneko_check(g, o.k);
    out << (r.has_tree ? "true" : "false") << '\n';
    if (o.witness && r.witness) out << r.witness->format() << '\n';
  }
  return 0;
}

int run_construct(const Options& o, std::ostream& out) {
  const Graph g = construct(o.family, parse_params(o.params));
  if (o.format == "g6") {
    out << serialize_graph6(g) << '\n';
  } else if (o.format == "edges") {
    out << serialize_edge_list(g);
  } else {
    throw Error("format must be 'g6' or 'edges'");
  }
  return 0;
}

int run_bounds(const Options& o, Input& in, std::ostream& out) {
  if (o.thresholds) {
    const SpectralThresholds s = main1_thresholds(o.n, o.k);
    const EdgeThresholds e = lemma_edge_thresholds(o.n, o.k);
    out << fmt(s.rho) << '\n';
    out << "rho_threshold = " << fmt(s.rho) << (s.rho_regime ? "" : " (outside hypothesis)") << '\n';
    out << "q_threshold = " << fmt(s.q) << (s.q_regime ? "" : " (outside hypothesis)") << '\n';
    out << "rho_bar_threshold = " << fmt(s.rho_bar) << '\n';
    out << "q_bar_threshold = " << fmt(s.q_bar) << '\n';
    out << "edge_threshold = " << e.e_lemma21 << (e.tree_regime ? "" : " (outside hypothesis)") << '\n';
    return 0;
  }
  for (const Graph& g : in.graphs()) {
    const auto reports = spectral_bound_reports(g);
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.holds; });
    out << (ok ? "true" : "false") << '\n';
    if (!o.all) continue;
    for (const auto& r : reports) {
      out << r.name << ": lhs = " << fmt(r.lhs) << ", rhs = " << fmt(r.rhs) << ", slack = " << fmt(r.slack)
          << (r.holds ? "" : " VIOLATED") << '\n';
    }
  }
  return 0;
}

int single_k(const Options& o) {
  const auto ks = parse_k_list(o.ks.empty() ? "0" : o.ks);
  if (ks.size() != 1) throw Error("a single --k is needed here");
  return ks.front();
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.tightness.empty()) {
    TightFamily f;
    if (o.tightness == "kended") {
      f = TightFamily::kKEnded;
    } else if (o.tightness == "leafdeg") {
      f = TightFamily::kLeafDegree;
    } else if (o.tightness == "star") {
      f = TightFamily::kStar;
    } else {
      throw Error("tightness family must be kended, leafdeg or star");
    }
    const TightnessReport r = check_extremal_tightness(f, o.n, single_k(o));
    out << (r.all_hold() ? "confirmed" : "counterexample") << '\n' << r.text();
    return r.all_hold() ? 0 : 1;
  }
  if (o.family_iv) {
    const int k = single_k(o);
    const auto members = check_exceptional_family_iv(o.n, k);
    out << members.size() << '\n' << format_family_iv(o.n, k, members);
    return 0;
  }
  if (o.theorem.empty() || o.source.empty()) throw Error("verify needs --theorem and --source");
  SweepSpec spec;
  spec.theorem = parse_theorem(o.theorem);
  spec.source = SourceSpec::parse(o.source);
  spec.source.plant = !o.no_plant;
  spec.source.allow_slow = o.slow;
  if (theorem_uses_k(spec.theorem)) {
    if (o.ks.empty()) throw Error("verify --theorem " + o.theorem + " needs --k");
    spec.ks = parse_k_list(o.ks);
  }
  spec.workers = o.workers;
  if (spec.source.kind == SourceSpec::Kind::kRandom) err << "# seed " << spec.source.seed << '\n';
  const VerifyReport r = run_sweep(spec);
  out << r.status_word() << '\n' << r.text();
  if (!o.summary.empty()) {
    std::ofstream f(o.summary);
    if (!f) throw Error("cannot write '" + o.summary + "'");
    f << r.summary();
  }
  return r.exit_code();
}

int run_convert(const Options& o, Input& in, std::ostream& out) {
  std::vector<Graph> graphs;
  if (o.from == "g6") {
    graphs = in.graphs();
  } else if (o.from == "edges") {
    graphs.push_back(parse_edge_list(in.all_text()));
  } else {
    throw Error("--from must be 'g6' or 'edges'");
  }
  for (const Graph& g : graphs) {
    if (o.to == "g6") {
      out << serialize_graph6(g) << '\n';
    } else if (o.to == "edges") {
      out << serialize_edge_list(g);
    } else {
      throw Error("--to must be 'g6' or 'edges'");
    }
  }
  return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spanning-tree and spectral verification toolkit", "spantree"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", kVersion);
  Options o;

  auto with_input = [&](CLI::App* sub) { sub->add_option("--in", o.in_path, "graph6 input file (default stdin)"); };

  auto* spectra = app.add_subcommand("spectra", "largest eigenvalue of A, Q or A_a");
  with_input(spectra);
  spectra->add_option("--kind", o.kind, "adj, q or aalpha:<a>");
  spectra->add_option("--tol", o.tol, "residual tolerance");
  spectra->add_flag("--verbose", o.verbose, "print residual and iteration count");

  auto* clos = app.add_subcommand("closure", "l-closure");
  with_input(clos);
  clos->add_option("--l", o.l, "degree-sum threshold")->required();
  clos->add_flag("--trace", o.trace, "list the joined pairs");

  auto* kended = app.add_subcommand("kended", "spanning tree with at most k leaves");
  with_input(kended);
  kended->add_option("--k", o.k, "leaf bound")->required();
  kended->add_flag("--witness", o.witness, "print a witness tree");

  auto* leafdeg = app.add_subcommand("leafdeg", "spanning tree with leaf degree at most k");
  with_input(leafdeg);
  leafdeg->add_option("--k", o.k, "leaf-degree bound")->required();
  leafdeg->add_flag("--witness", o.witness, "print a witness tree or violating subset");
  leafdeg->add_option("--mode", o.mode, "assisted or search");

  auto* kaneko = app.add_subcommand("kaneko", "isolated-vertex condition i(G-S) < (k+1)|S|");
  with_input(kaneko);
  kaneko->add_option("--k", o.k, "leaf-degree bound")->required();
  kaneko->add_flag("--witness", o.witness, "print a violating subset");

  auto* cons = app.add_subcommand("construct", "build a named graph");
  cons->add_option("--family", o.family,
                   "kn, kmn, path, cycle, star, petersen, kended-ext, leafdeg-ext, fig2, regular, regular-join")
      ->required();
  cons->add_option("--params", o.params, "name=value list, e.g. n=17,k=2");
  cons->add_option("--format", o.format, "g6 or edges");

  auto* bounds = app.add_subcommand("bounds", "spectral bounds and thresholds");
  with_input(bounds);
  bounds->add_flag("--all", o.all, "print every bound");
  bounds->add_flag("--thresholds", o.thresholds, "print the thresholds for --n and --k instead");
  bounds->add_option("--n", o.n, "order");
  bounds->add_option("--k", o.k, "tree parameter");

  auto* verify = app.add_subcommand("verify", "check a statement over a graph source");
  verify->add_option("--theorem", o.theorem, "T1.1 T1.2 T1.3i T1.3ii T1.3iii T1.3iv T1.4 T1.5a0 T1.5a1 L2.1 L2.2 bounds");
  verify->add_option("--source", o.source, "enum:N, file:PATH or random:N,P,COUNT,SEED");
  verify->add_option("--k", o.ks, "k, lo..hi or a comma list");
  verify->add_option("--workers", o.workers, "worker threads (default: all cores)");
  verify->add_option("--summary", o.summary, "write the key = value summary file");
  verify->add_flag("--no-plant", o.no_plant, "do not add extremal graphs to random sources");
  verify->add_flag("--slow", o.slow, "allow enumeration at n = 8");
  verify->add_option("--tightness", o.tightness, "kended, leafdeg or star: check an extremal instance");
  verify->add_flag("--family-iv", o.family_iv, "report on the regular-join exceptional family");
  verify->add_option("--n", o.n, "order for --tightness and --family-iv");

  auto* convert = app.add_subcommand("convert", "convert between graph6 and edge lists");
  with_input(convert);
  convert->add_option("--from", o.from, "g6 or edges");
  convert->add_option("--to", o.to, "g6 or edges");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  err << "# spantree " << kVersion << '\n';
  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string verb = sub->get_name();
    if (verb == "construct") return run_construct(o, out);
    if (verb == "verify") return run_verify(o, out, err);
    Input input(in, o.in_path);
    if (verb == "spectra") return run_spectra(o, input, out);
    if (verb == "closure") return run_closure(o, input, out);
    if (verb == "kended") return run_kended(o, input, out);
    if (verb == "leafdeg") return run_leafdeg(o, input, out);
    if (verb == "kaneko") return run_kaneko(o, input, out);
    if (verb == "bounds") return run_bounds(o, input, out);
    if (verb == "convert") return run_convert(o, input, out);
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace spantree
