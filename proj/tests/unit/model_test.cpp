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

#include <gtest/gtest.h>

#include "sca/call_chain.hpp"
#include "sca/call_graph.hpp"
#include "sca/error.hpp"
#include "sca/method_ref.hpp"
#include "sca/origin.hpp"
#include "sca/version.hpp"
#include "support.hpp"

namespace sca {
namespace {

using testing::ref;

TEST(MethodRefTest, ParsesParamsAndReturn) {
  const auto r = MethodRef::parse("com.app.Foo.bar(I)V");
  EXPECT_EQ(r.class_name(), "com.app.Foo");
  EXPECT_EQ(r.method_name(), "bar");
  EXPECT_EQ(r.descriptor(), "(I)V");
  EXPECT_EQ(r.params(), "I");
  EXPECT_EQ(r.return_type(), "V");
  EXPECT_EQ(r.str(), "com.app.Foo.bar(I)V");
}

TEST(MethodRefTest, EmptyDescriptorBody) {
  const auto r = MethodRef::parse("A.m()");
  EXPECT_EQ(r.class_name(), "A");
  EXPECT_EQ(r.method_name(), "m");
  EXPECT_EQ(r.params(), "");
  EXPECT_EQ(r.return_type(), "");
  EXPECT_EQ(r.str(), "A.m()");
}

TEST(MethodRefTest, MissingDescriptorIsError) {
  EXPECT_THROW(MethodRef::parse("com.app.Foo.bar"), ParseError);
}

TEST(MethodRefTest, MalformedInputsNameTheSpan) {
  for (const char* bad : {"", ".m()V", "A.()V", "Am()V", "A.m(V", "A.m()V)", "A.m((I)V",
                          "A..m()V"}) {
    try {
      MethodRef::parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const ParseError& e) {
      EXPECT_NE(std::string(e.what()).find('['), std::string::npos) << e.what();
    }
  }
}

TEST(MethodRefTest, RoundTripsRandomValidRefs) {
  testing::Rng rng(7);
  const std::string alpha = "abcXYZ_$09";
  auto ident = [&](std::size_t len) {
    std::string s(1, 'a' + static_cast<char>(rng() % 26));
    for (std::size_t i = 1; i < len; ++i) s += alpha[rng() % alpha.size()];
    return s;
  };
  for (int i = 0; i < 500; ++i) {
    std::string cls = ident(1 + rng() % 5);
    for (std::size_t k = rng() % 3; k > 0; --k) cls += "." + ident(1 + rng() % 5);
    const std::string name = ident(1 + rng() % 6);
    const std::string desc = "(" + ident(rng() % 4) + ")" + (rng() % 2 ? "V" : "");
    const MethodRef built(cls, name, desc);
    const MethodRef parsed = MethodRef::parse(built.str());
    EXPECT_EQ(parsed, built);
    EXPECT_EQ(parsed.str(), built.str());
    EXPECT_EQ(parsed.class_name(), cls);
    EXPECT_EQ(parsed.method_name(), name);
  }
}

TEST(VersionTest, OrdersNumericallyThenQualifier) {
  EXPECT_LT(Version::parse("1.2.3"), Version::parse("1.10.0"));
  EXPECT_LT(Version::parse("1.0.0"), Version::parse("1.0.0-rc1"));
  EXPECT_LT(Version::parse("1.0.0-alpha"), Version::parse("1.0.0-beta"));
  EXPECT_EQ(Version::parse("2.0.1").str(), "2.0.1");
  EXPECT_THROW(Version::parse("1.2"), ParseError);
  EXPECT_THROW(Version::parse("1.x.0"), ParseError);
  EXPECT_THROW(Version::parse("-1.0.0"), ParseError);
}

TEST(CoordinateTest, ParsesAndPrints) {
  const auto c = Coordinate::parse("org.example:libu:1.0.0");
  EXPECT_EQ(c.group, "org.example");
  EXPECT_EQ(c.artifact, "libu");
  EXPECT_EQ(c.version, Version::parse("1.0.0"));
  EXPECT_EQ(c.str(), "org.example:libu:1.0.0");
  EXPECT_THROW(Coordinate::parse("org.example:libu"), ParseError);
}

TEST(ConstraintTest, CaretAndTildeExpand) {
  const auto caret = Constraint::parse("^1.2.0");
  EXPECT_TRUE(caret.satisfied_by(Version::parse("1.2.0")));
  EXPECT_TRUE(caret.satisfied_by(Version::parse("1.9.9")));
  EXPECT_FALSE(caret.satisfied_by(Version::parse("2.0.0")));
  EXPECT_FALSE(caret.satisfied_by(Version::parse("1.1.9")));

  const auto tilde = Constraint::parse("~1.2.0");
  EXPECT_TRUE(tilde.satisfied_by(Version::parse("1.2.5")));
  EXPECT_FALSE(tilde.satisfied_by(Version::parse("1.3.0")));
}

TEST(ConstraintTest, ExactBoundsAndAny) {
  EXPECT_TRUE(Constraint::parse("=2.0.0").satisfied_by(Version::parse("2.0.0")));
  EXPECT_FALSE(Constraint::parse("=2.0.0").satisfied_by(Version::parse("2.0.1")));
  EXPECT_TRUE(Constraint::parse("1.0.0").satisfied_by(Version::parse("1.0.0")));
  const auto range = Constraint::parse(">=1.1.0 <2.1.0");
  EXPECT_TRUE(range.satisfied_by(Version::parse("1.1.0")));
  EXPECT_TRUE(range.satisfied_by(Version::parse("2.0.9")));
  EXPECT_FALSE(range.satisfied_by(Version::parse("2.1.0")));
  EXPECT_TRUE(Constraint::parse("*").satisfied_by(Version::parse("99.0.0")));
  EXPECT_THROW(Constraint::parse("^1.0.0 <3.0.0"), ParseError);
  EXPECT_THROW(Constraint::parse(">=banana"), ParseError);
}

TEST(OriginMapTest, PrefixMatch) {
  OriginMap map;
  map.add_framework("org.junit.");
  EXPECT_TRUE(map.classify(ref("org.junit.Runner.main()")).is_framework());
  EXPECT_TRUE(map.classify(ref("com.app.Main.main()")).is_first_party());
}

TEST(OriginMapTest, FirstMatchingRuleWins) {
  const auto lib = Coordinate::parse("org.example:l:1.0.0");
  OriginMap framework_first;
  framework_first.add_framework("org.junit.");
  framework_first.add_rule("org.", Origin::third_party(lib));
  EXPECT_TRUE(framework_first.classify(ref("org.junit.X.y()")).is_framework());

  OriginMap library_first;
  library_first.add_rule("org.", Origin::third_party(lib));
  library_first.add_framework("org.junit.");
  EXPECT_EQ(library_first.classify(ref("org.junit.X.y()")), Origin::third_party(lib));
}

TEST(OriginMapTest, PrefixWithoutTrailingDotMatchesWholeSegments) {
  OriginMap map;
  map.add_framework("org.junit");
  EXPECT_TRUE(map.classify(ref("org.junit.Runner.run()V")).is_framework());
  EXPECT_TRUE(map.classify(ref("org.junitx.Runner.run()V")).is_first_party());
}

TEST(OriginMapTest, DefaultFrameworks) {
  const auto map = OriginMap::with_default_frameworks();
  EXPECT_TRUE(map.classify(ref("org.junit.runner.JUnitCore.main()V")).is_framework());
  EXPECT_TRUE(map.classify(ref("org.testng.TestNG.main()V")).is_framework());
  EXPECT_TRUE(map.classify(ref("com.app.App.main()V")).is_first_party());
}

TEST(OriginTest, TextRoundTrip) {
  for (const auto& o : {Origin::first_party(), Origin::third_party(),
                        Origin::third_party(Coordinate::parse("g:a:1.0.0")),
                        Origin::framework("org.junit.")}) {
    EXPECT_EQ(Origin::parse(o.str()), o);
  }
}

TEST(OriginTest, OutranksIsStrictTotalOrder) {
  const std::vector<Origin> all{Origin::first_party(), Origin::third_party(),
                                Origin::third_party(Coordinate::parse("g:a:1.0.0")),
                                Origin::third_party(Coordinate::parse("g:b:1.0.0")),
                                Origin::framework("org.junit.")};
  for (const auto& a : all) {
    EXPECT_FALSE(outranks(a, a));
    for (const auto& b : all) {
      if (a != b) EXPECT_NE(outranks(a, b), outranks(b, a));
    }
  }
}

TEST(CallGraphTest, BuilderRejectsDanglingEdges) {
  GraphBuilder b;
  b.add_vertex(ref("a.A.f()"), Origin::first_party());
  EXPECT_THROW(b.add_edge(ref("a.A.f()"), ref("a.A.g()"), Provenance::kStatic), Error);
}

TEST(CallGraphTest, ProvenanceWidensWithoutDuplicates) {
  GraphBuilder b;
  b.add_vertex(ref("a.A.f()"), Origin::first_party());
  b.add_vertex(ref("a.A.g()"), Origin::first_party());
  EXPECT_TRUE(b.add_edge(ref("a.A.f()"), ref("a.A.g()"), Provenance::kStatic));
  EXPECT_FALSE(b.add_edge(ref("a.A.f()"), ref("a.A.g()"), Provenance::kDynamic));
  EXPECT_FALSE(b.add_edge(ref("a.A.f()"), ref("a.A.g()"), Provenance::kStatic));
  const CallGraph g = std::move(b).build();
  EXPECT_EQ(g.edge_count(), 1u);
  const auto p = g.edge_provenance(ref("a.A.f()"), ref("a.A.g()"));
  ASSERT_TRUE(p);
  EXPECT_TRUE(p->contains(Provenance::kStatic));
  EXPECT_TRUE(p->contains(Provenance::kDynamic));
  EXPECT_FALSE(p->contains(Provenance::kChain));
}

TEST(CallGraphTest, RemoveVertexDropsIncidentEdges) {
  GraphBuilder b;
  for (const char* v : {"a.A.f()", "a.A.g()", "a.A.h()"}) b.add_vertex(ref(v), Origin::first_party());
  b.add_edge(ref("a.A.f()"), ref("a.A.g()"), Provenance::kStatic);
  b.add_edge(ref("a.A.g()"), ref("a.A.h()"), Provenance::kStatic);
  b.remove_vertex(ref("a.A.g()"));
  const CallGraph g = std::move(b).build();
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(g.in_degree(ref("a.A.h()")), 0u);
}

TEST(CallGraphTest, EdgeEndpointsAreVerticesOnRandomGraphs) {
  testing::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto g = testing::random_digraph(rng, 1 + i % 15, 0.3);
    std::size_t count = 0;
    for (const auto& e : g.edges()) {
      EXPECT_TRUE(g.has_vertex(e.caller));
      EXPECT_TRUE(g.has_vertex(e.callee));
      EXPECT_TRUE(g.predecessors(e.callee).contains(e.caller));
      ++count;
    }
    EXPECT_EQ(count, g.edge_count());
  }
}

TEST(CallGraphTest, ShortestPathPrefersLexicographicallySmallest) {
  GraphBuilder b;
  for (const char* v : {"a.S.s()", "a.X.x()", "a.Y.y()", "a.T.t()"}) {
    b.add_vertex(ref(v), Origin::first_party());
  }
  b.add_edge(ref("a.S.s()"), ref("a.Y.y()"), Provenance::kStatic);
  b.add_edge(ref("a.S.s()"), ref("a.X.x()"), Provenance::kStatic);
  b.add_edge(ref("a.Y.y()"), ref("a.T.t()"), Provenance::kStatic);
  b.add_edge(ref("a.X.x()"), ref("a.T.t()"), Provenance::kStatic);
  const CallGraph g = std::move(b).build();
  const auto p = shortest_path(g, {ref("a.S.s()")}, ref("a.T.t()"));
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, (std::vector<MethodRef>{ref("a.S.s()"), ref("a.X.x()"), ref("a.T.t()")}));
  EXPECT_EQ(*shortest_path(g, {ref("a.S.s()")}, ref("a.S.s()")),
            std::vector<MethodRef>{ref("a.S.s()")});
  EXPECT_FALSE(shortest_path(g, {ref("a.T.t()")}, ref("a.S.s()")));
}

TEST(CallGraphTest, FirstPartyRootsIgnoreOtherOrigins) {
  GraphBuilder b;
  b.add_vertex(ref("a.A.f()"), Origin::first_party());
  b.add_vertex(ref("org.l.L.g()"), Origin::third_party());
  b.add_vertex(ref("org.junit.J.main()"), Origin::framework("org.junit."));
  b.add_vertex(ref("a.A.h()"), Origin::first_party());
  b.add_edge(ref("org.junit.J.main()"), ref("a.A.h()"), Provenance::kDynamic);
  const auto roots = first_party_roots(std::move(b).build());
  EXPECT_EQ(roots.methods, testing::refs({"a.A.f()"}));
}

TEST(CallChainTest, RejectsGapsAndEmptyChains) {
  const auto lib = Coordinate::parse("g:a:1.0.0");
  EXPECT_THROW(CallChain({}, lib), Error);
  EXPECT_THROW(CallChain({{ref("l.A.a()"), ref("l.B.b()")}, {ref("l.C.c()"), ref("l.D.d()")}},
                         lib),
               Error);
  const CallChain ok({{ref("l.A.a()"), ref("l.B.b()")}, {ref("l.B.b()"), ref("l.D.d()")}}, lib);
  EXPECT_EQ(ok.entry(), ref("l.A.a()"));
  EXPECT_EQ(ok.sink(), ref("l.D.d()"));
  EXPECT_EQ(ok.vertices().size(), 3u);
}

}  // namespace
}  // namespace sca
