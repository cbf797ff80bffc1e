#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "hypertrans/canonical.hpp"
#include "hypertrans/enumerate.hpp"
#include "hypertrans/error.hpp"
#include "hypertrans/families.hpp"
#include "hypertrans/hypergraph.hpp"
#include "test_support.hpp"

using namespace hypertrans;
using ::testing::ElementsAre;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::BadParam;
}

Hypergraph one_edge(int k) { return loose_path(k, 1); }

TEST(LoosePath, Values) {
  EXPECT_EQ(loose_path(3, 1), Hypergraph::build(3, 3, {{0, 1, 2}}));
  auto p = loose_path(3, 2);
  EXPECT_THAT(p.edges(), ElementsAre(Edge{0, 1, 2}, Edge{2, 3, 4}));
  // 6 pairs inside an edge, 4 pairs across at distance 2.
  EXPECT_EQ(transmission(p), 14);
  EXPECT_EQ(oracle::oracle_sigma(p), 14);
  EXPECT_EQ(transmission(loose_path(2, 4)), 20);
  EXPECT_EQ(classify(loose_path(4, 5)), StructureClass::hypertree);
}

TEST(LooseCycle, Values) {
  EXPECT_EQ(transmission(loose_cycle(3, 3)), 21);
  auto c43 = loose_cycle(3, 2);
  EXPECT_EQ(c43.n(), 4);
  EXPECT_EQ(transmission(c43), 7);
  EXPECT_EQ(transmission(loose_cycle(2, 5)), 15);
  for (int k = 2; k <= 5; ++k)
    for (int g = min_girth(k); g <= 5; ++g) {
      auto c = loose_cycle(k, g);
      EXPECT_EQ(c.n(), g * (k - 1));
      EXPECT_EQ(classify(c), StructureClass::unicyclic);
      EXPECT_EQ(oracle::cyclomatic_number(c), 1);
    }
  EXPECT_EQ(error_of([] { loose_cycle(2, 2); }), Errc::BadParam);
  EXPECT_EQ(error_of([] { loose_cycle(3, 1); }), Errc::BadParam);
}

TEST(Hyperstar, Values) {
  EXPECT_EQ(hyperstar(3, 0).n(), 1);
  EXPECT_EQ(hyperstar(3, 1), one_edge(3));
  auto s = hyperstar(3, 3);
  EXPECT_EQ(transmission(s), 33);
  EXPECT_EQ(hyperstar(3, 4).degree(0), 4);
}

TEST(PendantPath, Attach) {
  auto g = loose_cycle(3, 2);
  EXPECT_EQ(attach_pendant_path(g, 0, 0), g);
  EXPECT_TRUE(are_isomorphic(attach_pendant_path(one_edge(3), 0, 1), loose_path(3, 2)));
  // Vertex 0 is shared by both cycle edges.
  auto h = attach_pendant_path(g, 0, 1);
  EXPECT_EQ(transmission(h), 22);
  EXPECT_EQ(oracle::oracle_sigma(h), 22);
}

TEST(PendantPath, TwoPathsAtOneVertex) {
  auto e = one_edge(3);
  EXPECT_EQ(g_u(e, 0, 2, 0), attach_pendant_path(e, 0, 2));
  EXPECT_LT(transmission(g_u(e, 0, 1, 1)), transmission(g_u(e, 0, 2, 0)));
  EXPECT_EQ(error_of([&] { g_u(e, 0, 0, 1); }), Errc::BadParam);
}

TEST(PendantPath, PathsAtCoEdgeVertices) {
  auto p = loose_path(3, 2);
  EXPECT_EQ(g_uv(p, 0, 1, 2, 0), attach_pendant_path(p, 0, 2));
  EXPECT_EQ(g_uv(p, 0, 1, 0, 2), g_uv(p, 1, 0, 2, 0));
  EXPECT_LT(transmission(g_uv(p, 0, 1, 1, 1)), transmission(g_uv(p, 0, 1, 2, 0)));
  EXPECT_EQ(error_of([&] { g_uv(p, 0, 3, 1, 1); }), Errc::NotCoEdge);
  EXPECT_EQ(error_of([&] { g_uv(p, 0, 0, 1, 1); }), Errc::NotCoEdge);
}

TEST(Graft, TrivialHangersGiveTheHost) {
  auto p = loose_path(3, 2);
  std::vector<RootedHypergraph> trivial(2);
  for (int s = 0; s <= 2; ++s) EXPECT_EQ(graft_at_pendant_edge(p, 1, s, trivial), p);
}

TEST(Graft, MatchesEdgeByEdgeConstruction) {
  auto p = loose_path(3, 2);
  std::vector<RootedHypergraph> hangers{{one_edge(3), 0}, {}};
  // Pendant edge {2,3,4} is anchored at 2; the first free vertex is 3.
  auto g = graft_at_pendant_edge(p, 1, 0, hangers);
  EXPECT_EQ(g.m(), 3);
  EXPECT_EQ(classify(g), StructureClass::hypertree);
  EXPECT_EQ(g, attach_pendant_path(p, 3, 1));
  EXPECT_EQ(transmission(g), oracle::oracle_sigma(g));

  auto shifted = graft_at_pendant_edge(p, 1, 1, hangers);
  EXPECT_EQ(shifted, attach_pendant_path(p, 2, 1));
  EXPECT_GT(transmission(g), transmission(shifted));
}

TEST(Graft, RejectsNonPendantEdge) {
  auto c = loose_cycle(3, 3);
  std::vector<RootedHypergraph> trivial(2);
  EXPECT_EQ(error_of([&] { graft_at_pendant_edge(c, 0, 0, trivial); }), Errc::NotPendantEdge);
  auto p = loose_path(3, 2);
  std::vector<RootedHypergraph> one(1);
  EXPECT_EQ(error_of([&] { graft_at_pendant_edge(p, 1, 0, one); }), Errc::BadParam);
}

TEST(CgStar, Values) {
  EXPECT_EQ(transmission(cg_star(3, 2, std::vector<int>{2, 0})), 45);
  EXPECT_EQ(transmission(cg_star(3, 2, std::vector<int>{1, 0})), 22);
  EXPECT_EQ(cg_star(3, 3, std::vector<int>{0, 0, 0}), loose_cycle(3, 3));
  auto g = cg_star(4, 3, std::vector<int>{1, 2, 0});
  EXPECT_EQ(classify(g), StructureClass::unicyclic);
  EXPECT_EQ(g.m(), 6);
  EXPECT_EQ(error_of([] { cg_star(3, 2, std::vector<int>{1}); }), Errc::BadParam);
}

TEST(TildeC2, Values) {
  EXPECT_EQ(tilde_c2(3, 0, 0), loose_cycle(3, 2));
  EXPECT_EQ(transmission(tilde_c2(3, 0, 1)), 24);
  EXPECT_EQ(transmission(tilde_c2(3, 1, 1)), 57);
  for (int k = 3; k <= 5; ++k)
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q) {
        auto g = tilde_c2(k, p, q);
        EXPECT_EQ(classify(g), StructureClass::unicyclic);
        EXPECT_EQ(transmission(g), oracle::oracle_sigma(g));
        EXPECT_TRUE(are_isomorphic(g, tilde_c2(k, q, p)));
      }
}

TEST(Graphs, LollipopAndTriangleStar) {
  EXPECT_EQ(lollipop_graph(3), triangle_star_graph(3));
  EXPECT_EQ(transmission(lollipop_graph(3)), 3);
  EXPECT_EQ(transmission(triangle_star_graph(5)), 15);
  EXPECT_EQ(transmission(lollipop_graph(5)), 17);
  EXPECT_EQ(classify(lollipop_graph(7)), StructureClass::unicyclic);
}

TEST(FamilySpec, ParseAndRoundTrip) {
  for (std::string text : {"loose-path:k=3,m=2", "loose-cycle:k=3,g=3", "hyperstar:k=4,m=3",
                           "c2-star:k=3,t=2/0", "cg-star:k=3,g=3,t=1/0/2", "tilde-c2:k=3,p=1,q=1",
                           "lollipop:k=2,m=5", "triangle-star:k=2,m=5"}) {
    auto spec = FamilySpec::parse(text);
    EXPECT_EQ(spec.to_string(), text);
    EXPECT_EQ(FamilySpec::parse(spec.to_string()), spec);
  }
  EXPECT_EQ(FamilySpec::parse("tilde-c2:k=3,p=1,q=1").construct(), tilde_c2(3, 1, 1));
  EXPECT_EQ(FamilySpec::parse("c2-star:k=3,t=2/0").construct(), cg_star(3, 2, std::vector<int>{2, 0}));
}

TEST(FamilySpec, Rejects) {
  for (std::string text : {"", "loose-cycle", "loose-cycle:", "nope:k=3", "loose-cycle:k=3",
                           "loose-cycle:k=3,g=3,m=2", "loose-cycle:k=x,g=3", "loose-cycle:k=3,g=3,",
                           "loose-cycle:k=3,k=3,g=3", "cg-star:k=3,g=2,t=1//2", "tilde-c2:k=3,p=1"}) {
    EXPECT_EQ(error_of([&] { FamilySpec::parse(text); }), Errc::ParseError) << text;
  }
  EXPECT_EQ(error_of([] { FamilySpec::parse("loose-cycle:k=2,g=2").construct(); }), Errc::BadParam);
  EXPECT_EQ(error_of([] { FamilySpec::parse("lollipop:k=3,m=5").construct(); }), Errc::BadParam);
}

}  // namespace
