#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <set>

#include "hypertrans/canonical.hpp"
#include "hypertrans/enumerate.hpp"
#include "hypertrans/error.hpp"
#include "hypertrans/families.hpp"
#include "hypertrans/transforms.hpp"
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

// Structural checks every decomposition must pass.
void expect_valid_decomposition(const Hypergraph& g, const UnicyclicDecomposition& d) {
  const int k = g.k();
  const int girth = d.girth;
  ASSERT_EQ(static_cast<int>(d.cycle_edges.size()), girth);
  ASSERT_EQ(static_cast<int>(d.cycle_vertices.size()), girth * (k - 1));
  ASSERT_EQ(d.attachments.size(), d.cycle_vertices.size());
  std::set<Vertex> on_cycle(d.cycle_vertices.begin(), d.cycle_vertices.end());
  EXPECT_EQ(on_cycle.size(), d.cycle_vertices.size());
  for (int i = 0; i < girth; ++i) {
    const Edge& e = g.edge(d.cycle_edges[i]);
    // Edge i holds positions i(k-1) .. (i+1)(k-1), wrapping to 0.
    for (int j = 0; j < k; ++j) {
      Vertex v = d.cycle_vertices[(i * (k - 1) + j) % d.cycle_vertices.size()];
      EXPECT_TRUE(g.contains(e, v));
    }
  }
  std::vector<int> owner(g.n(), -1);
  for (std::size_t i = 0; i < d.attachments.size(); ++i) {
    EXPECT_TRUE(std::binary_search(d.attachments[i].begin(), d.attachments[i].end(), d.cycle_vertices[i]));
    for (Vertex v : d.attachments[i]) {
      EXPECT_EQ(owner[v], -1);
      owner[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < g.n(); ++v) EXPECT_NE(owner[v], -1);
  // Attachments are hypertrees.
  for (const auto& a : d.attachments) {
    auto h = induced_subhypergraph(g, a);
    EXPECT_EQ(classify(h), StructureClass::hypertree);
  }
}

TEST(Decompose, LooseCycle) {
  auto g = loose_cycle(3, 3);
  auto d = decompose(g);
  EXPECT_EQ(d.girth, 3);
  EXPECT_THAT(d.cycle_vertices, ElementsAre(0, 1, 2, 3, 4, 5));
  for (const auto& a : d.attachments) EXPECT_EQ(a.size(), 1u);
  expect_valid_decomposition(g, d);
}

TEST(Decompose, StarAtSharedVertex) {
  auto g = cg_star(3, 2, std::vector<int>{2, 0});
  auto d = decompose(g);
  EXPECT_EQ(d.girth, 2);
  EXPECT_EQ(d.cycle_vertices[0], 0);
  EXPECT_EQ(d.attachments[0].size(), 5u);
  expect_valid_decomposition(g, d);
}

TEST(Decompose, TildeC2) {
  auto g = tilde_c2(3, 1, 1);
  auto d = decompose(g);
  EXPECT_EQ(d.girth, 2);
  EXPECT_EQ(d.attachments[1].size(), 3u);
  EXPECT_EQ(d.attachments[3].size(), 3u);
  EXPECT_EQ(d.attachments[0].size(), 1u);
  EXPECT_EQ(d.attachments[2].size(), 1u);
}

TEST(Decompose, RandomInstances) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    int k = 2 + static_cast<int>(rng() % 4);
    int m = min_girth(k) + static_cast<int>(rng() % 6);
    auto g = random_unicyclic(k, m, rng());
    ASSERT_EQ(classify(g), StructureClass::unicyclic);
    auto d = decompose(g);
    expect_valid_decomposition(g, d);
    // One component of G - E(cycle) per cycle vertex.
    auto h = g;
    std::vector<EdgeId> ids = d.cycle_edges;
    std::sort(ids.rbegin(), ids.rend());
    for (EdgeId e : ids) h = delete_edge(h, e);
    EXPECT_EQ(components(h).size(), d.cycle_vertices.size());
  }
}

TEST(Decompose, RejectsOthers) {
  EXPECT_EQ(error_of([] { decompose(loose_path(3, 3)); }), Errc::NotUnicyclic);
}

TEST(MoveEdges, Basics) {
  auto p = loose_path(3, 2);
  EXPECT_EQ(move_edges(p, {{}, 0, 1}), p);
  auto star = move_edges(p, {{1}, 2, 0});
  EXPECT_TRUE(are_isomorphic(star, hyperstar(3, 2)));
  EXPECT_EQ(move_edges(star, {{*star.find_edge({0, 3, 4})}, 0, 2}), p);
  EXPECT_EQ(error_of([&] { move_edges(p, {{0}, 3, 1}); }), Errc::SourceNotInEdge);
  EXPECT_EQ(error_of([&] { move_edges(p, {{0}, 0, 1}); }), Errc::TargetInEdge);
  EXPECT_EQ(error_of([&] { move_edges(p, {{0, 0}, 0, 3}); }), Errc::BadParam);
  auto c = loose_cycle(3, 2);  // {0,1,2}, {0,2,3}
  EXPECT_EQ(error_of([&] { move_edges(c, {{0}, 1, 3}); }), Errc::CollisionWithExistingEdge);
}

TEST(CycleCollapse, Candidates) {
  for (int g = 3; g <= 5; ++g) {
    auto c = loose_cycle(3, g);
    auto [a, b] = cycle_collapse_candidates(c);
    EXPECT_EQ(decompose(a).girth, 2);
    EXPECT_EQ(decompose(b).girth, 2);
    EXPECT_TRUE(transmission(a) > transmission(c) || transmission(b) > transmission(c));
    EXPECT_EQ(transmission(a), oracle::oracle_sigma(a));
  }
  EXPECT_EQ(error_of([] { cycle_collapse_candidates(loose_cycle(3, 2)); }), Errc::GirthTooSmall);
}

TEST(JunctionShift, Move) {
  auto g = cg_star(3, 2, std::vector<int>{0, 1});
  auto d = decompose(g);
  EXPECT_EQ(d.attachments[2].size(), 3u);
  auto moved = shift_junction_attachments(g);
  auto sets = junction_shift_sets(g);
  Sigma u1 = static_cast<Sigma>(sets.moved.size());
  Sigma u2 = static_cast<Sigma>(sets.far_side.size());
  Sigma h2 = static_cast<Sigma>(sets.near.size());
  EXPECT_GE(u2, h2);
  Sigma delta = transmission(moved) - transmission(g);
  EXPECT_EQ(delta, u1 * (u2 - h2 + 1));
  EXPECT_GT(delta, 0);
  EXPECT_EQ(error_of([] { shift_junction_attachments(loose_cycle(3, 2)); }), Errc::NothingToMove);
  EXPECT_EQ(error_of([] { shift_junction_attachments(loose_cycle(3, 3)); }), Errc::GirthNotTwo);
}

TEST(PendantGraft, Pair) {
  auto base = attach_pendant_path(loose_path(3, 2), 0, 1);
  auto pend = pendant_edges(base);
  ASSERT_FALSE(pend.empty());
  std::vector<RootedHypergraph> hangers{{hyperstar(3, 1), 0}, {}};
  auto [g0, gs] = pendant_graft_pair(base, pend.front(), 1, hangers);
  Sigma bound = 2 * (base.n() - 3);
  EXPECT_GE(transmission(g0) - transmission(gs), bound);
  EXPECT_GT(bound, 0);
  std::vector<RootedHypergraph> trivial(2);
  EXPECT_EQ(error_of([&] { pendant_graft_pair(base, pend.front(), 1, trivial); }), Errc::BadParam);
  EXPECT_EQ(error_of([&] { pendant_graft_pair(base, pend.front(), 0, hangers); }), Errc::BadParam);
}

TEST(PendantEdges, Path) {
  EXPECT_THAT(pendant_edges(loose_path(3, 3)), ElementsAre(0, 2));
  EXPECT_TRUE(pendant_edges(loose_cycle(3, 3)).empty());
}

}  // namespace
