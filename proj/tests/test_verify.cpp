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

#include <algorithm>

#include "spantree/constructions.hpp"
#include "spantree/graph_io.hpp"
#include "spantree/verify.hpp"

using namespace spantree;

namespace {

VerifyReport sweep(Theorem t, const std::string& source, const std::string& ks, int workers = 1) {
  SweepSpec s;
  s.source = SourceSpec::parse(source);
  s.theorem = t;
  s.ks = parse_k_list(ks);
  s.workers = workers;
  return run_sweep(s);
}

}  // namespace

TEST_CASE("parsing") {
  CHECK(parse_theorem("T1.3iv") == Theorem::kT13iv);
  CHECK(theorem_id(Theorem::kL22) == "L2.2");
  for (Theorem t : {Theorem::kT11, Theorem::kT15a1, Theorem::kBounds}) CHECK(parse_theorem(theorem_id(t)) == t);
  CHECK_THROWS_AS(parse_theorem("T9"), Error);
  CHECK(parse_k_list("1..3") == std::vector<int>{1, 2, 3});
  CHECK(parse_k_list("2,4") == std::vector<int>{2, 4});
  CHECK(parse_k_list("5") == std::vector<int>{5});
  CHECK_THROWS_AS(parse_k_list("3..1"), Error);
  CHECK_THROWS_AS(parse_k_list("x"), Error);
  const SourceSpec r = SourceSpec::parse("random:17,0.7,500,1");
  CHECK(r.kind == SourceSpec::Kind::kRandom);
  CHECK(r.n == 17);
  CHECK(r.count == 500);
  CHECK(r.seed == 1u);
  CHECK(r.text() == "random:17,0.7,500,1");
  CHECK(SourceSpec::parse("enum:6").text() == "enum:6");
  CHECK_THROWS_AS(load_source(SourceSpec::parse("enum:9"), Theorem::kT14, {1}), Error);
  CHECK_THROWS_AS(SourceSpec::parse("random:17,1.5,5,1"), Error);
}

TEST_CASE("proven statements are confirmed on small orders") {
  const VerifyReport t14 = sweep(Theorem::kT14, "enum:6", "1..3");
  CHECK(t14.total == 3 * 112);
  CHECK(t14.counterexamples.empty());
  CHECK(t14.exit_code() == 0);
  CHECK(t14.hypothesis_held > 0);
  const VerifyReport t12 = sweep(Theorem::kT12, "enum:6", "2..5");
  CHECK(t12.counterexamples.empty());
  CHECK(t12.status() == VerifyReport::Status::kConfirmed);
  const VerifyReport t11 = sweep(Theorem::kT11, "enum:6", "2..5");
  CHECK(t11.counterexamples.empty());
  CHECK(t11.hypothesis_held > 0);
  const VerifyReport b = sweep(Theorem::kBounds, "enum:6", "1");
  CHECK(b.counterexamples.empty());
  CHECK(b.checked == 112);
}

TEST_CASE("vacuous sweep") {
  const VerifyReport r = sweep(Theorem::kL21, "enum:4", "2");
  CHECK(r.hypothesis_held == 0);
  CHECK(r.exit_code() == 2);
  CHECK(r.status_word() == "vacuous");
}

TEST_CASE("the regular-join exception clause misses complete bipartite graphs") {
  const VerifyReport r6 = sweep(Theorem::kT13iv, "enum:6", "2");
  CHECK(r6.exit_code() == 1);
  CHECK(std::find(r6.counterexamples.begin(), r6.counterexamples.end(), "E?~o 2") != r6.counterexamples.end());
  for (int n = 6; n <= 12; ++n) {
    const int k = n - 4;
    const Graph g = complete_bipartite(2, n - 2);
    const InstanceOutcome o = check_instance(Theorem::kT13iv, g, k);
    CHECK(o.violation());
    CHECK_FALSE(in_regular_join_family(g, k));
  }
}

TEST_CASE("determinism across worker counts") {
  const VerifyReport a = sweep(Theorem::kT13iii, "enum:6", "2..4", 1);
  const VerifyReport b = sweep(Theorem::kT13iii, "enum:6", "2..4", 3);
  CHECK(a.text() == b.text());
  const VerifyReport c = sweep(Theorem::kT15a0, "random:10,0.6,40,9", "1..2", 1);
  const VerifyReport d = sweep(Theorem::kT15a0, "random:10,0.6,40,9", "1..2", 4);
  CHECK(c.text() == d.text());
  CHECK(c.text().find("seed") == std::string::npos);
}

TEST_CASE("random sweeps plant the extremal graph") {
  const VerifyReport r = sweep(Theorem::kT13i, "random:17,0.7,60,1", "2");
  CHECK(r.total == 61);
  CHECK(r.hypothesis_held >= 1);
  CHECK(r.counterexamples.empty());
  SourceSpec s = SourceSpec::parse("random:17,0.7,60,1");
  s.plant = false;
  CHECK(load_source(s, Theorem::kT13i, {2}).size() == 60u);
}

TEST_CASE("over-cap instances are skipped and counted") {
  const InstanceOutcome big = check_instance(Theorem::kT15a0, complete(20), 1);
  CHECK(big.status == InstanceOutcome::Status::kOverCap);
}

TEST_CASE("report counts add up") {
  const VerifyReport r = sweep(Theorem::kT13i, "enum:7", "2..3");
  CHECK(r.total == r.checked + r.skipped_not_applicable + r.skipped_over_cap);
  CHECK(r.conclusion_held <= r.checked);
  for (const std::string& ce : r.counterexamples) {
    const auto space = ce.find(' ');
    const Graph g = parse_graph6(ce.substr(0, space));
    CHECK(check_instance(Theorem::kT13i, g, std::stoi(ce.substr(space + 1))).violation());
  }
}

TEST_CASE("tightness") {
  const TightnessReport k = check_extremal_tightness(TightFamily::kKEnded, 17, 2);
  CHECK(k.in_regime);
  CHECK(k.all_hold());
  const TightnessReport l = check_extremal_tightness(TightFamily::kLeafDegree, 14, 1);
  CHECK(l.in_regime);
  CHECK(l.all_hold());
  for (int s = 2; s <= 4; ++s) CHECK(check_extremal_tightness(TightFamily::kStar, s + 2, s).all_hold());
  CHECK_FALSE(check_extremal_tightness(TightFamily::kKEnded, 12, 2).in_regime);
  CHECK_THROWS_AS(check_extremal_tightness(TightFamily::kStar, 7, 2), Error);
}

TEST_CASE("regular join family") {
  const auto members = check_exceptional_family_iv(10, 2);
  REQUIRE(members.size() == 3u);
  CHECK(members[0].t == 6);
  CHECK(members[0].r == 0);
  CHECK(members[0].q_complement == doctest::Approx(10.0).epsilon(1e-9));
  CHECK(members[2].t == 10);
  CHECK(members[2].q_complement == doctest::Approx(10.0).epsilon(1e-9));
  for (const FamilyMember& m : members) CHECK(m.within_threshold);
  CHECK(check_exceptional_family_iv(9, 2).empty());
}
