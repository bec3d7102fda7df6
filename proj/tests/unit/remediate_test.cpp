// Copyright 2026 The SCA Authors
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

#include "sca/remediate.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "sca/chains.hpp"
#include "sca/error.hpp"
#include "sca/formats.hpp"
#include "sca/pipeline.hpp"
#include "support.hpp"

namespace sca::remediate {
namespace {

using testing::read_fixture;
using testing::ref;
using testing::refs;

ProgramDocument libr(const std::string& version) {
  return formats::load_program(read_fixture("remediation/libr-" + version + ".json"));
}

std::set<MethodRef> risky_set(const BreakingReport& r) {
  std::set<MethodRef> out;
  for (const auto& m : r.risky) out.insert(m.method);
  return out;
}

TEST(DiffTest, IdenticalDocuments) {
  const auto d = diff_versions(libr("1.0.0"), libr("1.0.0"));
  EXPECT_TRUE(d.added.empty());
  EXPECT_TRUE(d.removed.empty());
  EXPECT_TRUE(d.body_changed.empty());
}

TEST(DiffTest, FixtureUpgrade) {
  const auto d = diff_versions(libr("1.0.0"), libr("2.0.0"));
  EXPECT_EQ(d.added, refs({"org.libr.Core.fresh()V"}));
  EXPECT_TRUE(d.removed.empty());
  EXPECT_EQ(d.body_changed, refs({"org.libr.Core.safe()V", "org.libr.Core.old()V"}));
}

TEST(DiffTest, SingleDigestChange) {
  auto v2 = libr("1.0.0");
  v2.library = Coordinate::parse("org.example:libr:1.0.1");
  v2.classes[1].methods[0].body_digest = "changed";
  const auto d = diff_versions(libr("1.0.0"), v2);
  EXPECT_EQ(d.body_changed, refs({"org.libr.Core.safe()V"}));
  EXPECT_TRUE(d.added.empty());
}

TEST(DiffTest, CallSiteChangeCountsAsBodyChange) {
  auto v2 = libr("1.0.0");
  v2.classes[0].methods[0].call_sites.clear();
  EXPECT_EQ(diff_versions(libr("1.0.0"), v2).body_changed, refs({"org.libr.Api.stable()V"}));
}

TEST(DiffTest, AddedOverloadOnly) {
  auto v2 = libr("1.0.0");
  MethodModel overload{ref("org.libr.Core.safe(I)V")};
  overload.body_digest = "d-safe";
  v2.classes[1].methods.push_back(overload);
  const auto d = diff_versions(libr("1.0.0"), v2);
  EXPECT_EQ(d.added, refs({"org.libr.Core.safe(I)V"}));
  EXPECT_TRUE(d.removed.empty());
  EXPECT_TRUE(d.body_changed.empty());
}

TEST(DiffTest, PackageMismatchIsError) {
  auto other = libr("2.0.0");
  other.library = Coordinate::parse("org.example:other:2.0.0");
  EXPECT_THROW(diff_versions(libr("1.0.0"), other), AnalysisError);
  EXPECT_THROW(diff_versions(formats::load_program(read_fixture("remediation/app.json")),
                             libr("1.0.0")),
               AnalysisError);
}

TEST(ClosureTest, NoCallersMeansSeedsOnly) {
  VersionDiff d{Coordinate::parse("g:a:1.0.0"), Coordinate::parse("g:a:2.0.0"), {},
                refs({"l.A.a()V"}), refs({"l.B.b()V"})};
  const auto sem = semantic_closure(d, CallGraph{});
  EXPECT_EQ(sem.changed_closure, refs({"l.A.a()V", "l.B.b()V"}));
  for (const auto& [m, why] : sem.reasons) EXPECT_EQ(why.kind, ChangeReason::Kind::kDirect);
}

TEST(ClosureTest, PropagatesThroughCallers) {
  GraphBuilder b;
  for (const char* m : {"l.A.a()V", "l.B.b()V", "l.C.c()V", "l.Z.z()V"}) {
    b.add_vertex(ref(m), Origin::third_party());
  }
  b.add_edge(ref("l.A.a()V"), ref("l.B.b()V"), Provenance::kStatic);
  b.add_edge(ref("l.B.b()V"), ref("l.C.c()V"), Provenance::kStatic);
  b.add_edge(ref("l.C.c()V"), ref("l.Z.z()V"), Provenance::kStatic);
  VersionDiff d{Coordinate::parse("g:a:1.0.0"), Coordinate::parse("g:a:2.0.0"), {}, {},
                refs({"l.C.c()V"})};
  const auto sem = semantic_closure(d, std::move(b).build());
  EXPECT_EQ(sem.changed_closure, refs({"l.A.a()V", "l.B.b()V", "l.C.c()V"}));
  const auto& why = sem.reasons.at(ref("l.A.a()V"));
  EXPECT_EQ(why.kind, ChangeReason::Kind::kViaCallee);
  EXPECT_EQ(why.path, (std::vector{ref("l.A.a()V"), ref("l.B.b()V"), ref("l.C.c()V")}));
}

TEST(ClosureTest, FixtureUpgradeClosure) {
  const auto v1 = libr("1.0.0");
  const auto sem = semantic_closure(diff_versions(v1, libr("2.0.0")), chains::library_graph(v1));
  EXPECT_EQ(sem.changed_closure, refs({"org.libr.Core.safe()V", "org.libr.Core.old()V",
                                       "org.libr.Api.stable()V", "org.libr.Api.legacy()V"}));
}

TEST(ClosureTest, MatchesOracleAndLaws) {
  testing::Rng rng(131);
  for (int i = 0; i < 400; ++i) {
    const auto g = testing::random_digraph(rng, 1 + rng() % 30, 0.08);
    std::vector<MethodRef> all;
    for (const auto& [m, _] : g.vertices()) all.push_back(m);
    std::set<MethodRef> seeds;
    for (const auto& m : all) {
      if (rng() % 6 == 0) seeds.insert(m);
    }
    const auto closure = changed_callers(seeds, g);
    ASSERT_EQ(closure, testing::closure_oracle(g, seeds));
    EXPECT_EQ(changed_callers(closure, g), closure);
    auto bigger = seeds;
    bigger.insert(all[rng() % all.size()]);
    const auto larger = changed_callers(bigger, g);
    EXPECT_TRUE(std::includes(larger.begin(), larger.end(), closure.begin(), closure.end()));

    VersionDiff d{Coordinate::parse("g:a:1.0.0"), Coordinate::parse("g:a:2.0.0"), {}, {}, seeds};
    const auto sem = semantic_closure(d, g);
    EXPECT_EQ(sem.changed_closure, closure);
    for (const auto& [m, why] : sem.reasons) {
      if (why.kind == ChangeReason::Kind::kDirect) {
        EXPECT_TRUE(seeds.contains(m));
        continue;
      }
      ASSERT_GE(why.path.size(), 2u);
      EXPECT_EQ(why.path.front(), m);
      EXPECT_TRUE(seeds.contains(why.path.back()));
      for (std::size_t k = 0; k + 1 < why.path.size(); ++k) {
        EXPECT_TRUE(g.has_edge(why.path[k], why.path[k + 1]));
      }
    }
  }
}

TEST(BreakingTest, NoOverlapIsNoObservedImpact) {
  const auto v1 = libr("1.0.0");
  const auto sem = semantic_closure(diff_versions(v1, libr("2.0.0")), chains::library_graph(v1));
  GraphBuilder b;
  b.add_vertex(ref("a.M.main()V"), Origin::first_party());
  const auto r = check_breaking(std::move(b).build(), EntryPointSet{refs({"a.M.main()V"})}, sem,
                                GraphMode::kStaticOnly);
  EXPECT_TRUE(r.risky.empty());
  EXPECT_EQ(r.verdict, Verdict::kNoObservedImpact);
}

TEST(BreakingTest, DirectEntryCallIsFlaggedWithWitness) {
  const auto v1 = libr("1.0.0");
  const auto sem = semantic_closure(diff_versions(v1, libr("2.0.0")), chains::library_graph(v1));
  GraphBuilder b;
  b.add_vertex(ref("a.M.main()V"), Origin::first_party());
  b.add_vertex(ref("org.libr.Api.stable()V"), Origin::third_party());
  b.add_edge(ref("a.M.main()V"), ref("org.libr.Api.stable()V"), Provenance::kStatic);
  const auto r = check_breaking(std::move(b).build(), EntryPointSet{refs({"a.M.main()V"})}, sem,
                                GraphMode::kStaticOnly);
  ASSERT_EQ(r.risky.size(), 1u);
  EXPECT_EQ(r.risky[0].witness,
            (std::vector{ref("a.M.main()V"), ref("org.libr.Api.stable()V")}));
  EXPECT_EQ(r.verdict, Verdict::kPotentiallyBreaking);
}

TEST(BreakingTest, DynamicModeDropsInfeasibleStaticEdge) {
  pipeline::GraphInputs in;
  in.app = formats::load_program(read_fixture("remediation/app.json"));
  in.traces.push_back(formats::load_trace(read_fixture("remediation/trace.jsonl")));
  in.map = pipeline::build_origin_map({}, {}, {});
  const auto graphs = pipeline::build_graphs(in);
  const auto v1 = libr("1.0.0");
  const auto sem = semantic_closure(diff_versions(v1, libr("2.0.0")), chains::library_graph(v1));
  std::map<GraphMode, std::set<MethodRef>> risky;
  for (const auto mode : {GraphMode::kStaticOnly, GraphMode::kDynamicOnly, GraphMode::kCombined}) {
    const auto& g = graphs.select(mode);
    risky[mode] = risky_set(check_breaking(g.graph, g.entry_points, sem, mode));
  }
  EXPECT_EQ(risky[GraphMode::kStaticOnly],
            refs({"org.libr.Api.stable()V", "org.libr.Api.legacy()V"}));
  EXPECT_EQ(risky[GraphMode::kDynamicOnly], refs({"org.libr.Api.stable()V"}));
  for (const auto mode : {GraphMode::kStaticOnly, GraphMode::kDynamicOnly}) {
    EXPECT_TRUE(std::includes(risky[GraphMode::kCombined].begin(),
                              risky[GraphMode::kCombined].end(), risky[mode].begin(),
                              risky[mode].end()));
  }
}

TEST(GraphModeTest, StringsRoundTrip) {
  for (const auto m : {GraphMode::kStaticOnly, GraphMode::kDynamicOnly, GraphMode::kCombined}) {
    EXPECT_EQ(graph_mode_from_string(to_string(m)), m);
  }
  EXPECT_EQ(to_string(GraphMode::kDynamicOnly), "dynamic-only");
  EXPECT_THROW(graph_mode_from_string("both"), Error);
}

}  // namespace
}  // namespace sca::remediate
