#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypertrans/hypergraph.hpp"

namespace hypertrans {

/// A connected hypergraph with a distinguished vertex used as the gluing point.
struct RootedHypergraph {
  Hypergraph graph;
  Vertex root = 0;
};

/// Edges i(k-1)..i(k-1)+k-1 for i < m; m(k-1)+1 vertices.
Hypergraph loose_path(int k, int m);

/// Loose cycle on g(k-1) vertices, edge i spanning i(k-1)..i(k-1)+k-1 with
/// wraparound to vertex 0. For g = 2 the two edges share vertices 0 and k-1.
Hypergraph loose_cycle(int k, int g);

/// t edges through center 0. hyperstar(k, 0) is the single vertex.
Hypergraph hyperstar(int k, int t);

/// Appends a pendant path of p edges at u; new vertices get ids n, n+1, ...
Hypergraph attach_pendant_path(const Hypergraph& g, Vertex u, int p);

/// Two pendant paths of lengths p >= 1 and q >= 0 at the same vertex u.
Hypergraph g_u(const Hypergraph& g, Vertex u, int p, int q);

/// Pendant path of length p at u and of length q at v, where u != v lie in a
/// common edge. The path at u is attached first.
Hypergraph g_uv(const Hypergraph& g, Vertex u, Vertex v, int p, int q);

/// Glues k-1 rooted hypergraphs onto the pendant edge e = {w_1, ..., w_k} of g,
/// where w_k is the unique vertex of e with degree >= 2 (the largest vertex of
/// e when g has a single edge) and w_1 < ... < w_{k-1} are the others.
/// The root of hangers[i] goes to w_k when i < s, otherwise to w_{i+1}.
/// Non-root vertices are appended hanger by hanger in increasing id order.
Hypergraph graft_at_pendant_edge(const Hypergraph& g, EdgeId e, int s,
                                 std::span<const RootedHypergraph> hangers);

/// Loose cycle of girth g with a hyperstar of star_edges[i] edges centered at
/// cycle vertex i(k-1).
Hypergraph cg_star(int k, int g, std::span<const int> star_edges);

/// Two-edge loose cycle with a pendant path of length p at vertex 1 and of
/// length q at vertex k (one non-shared vertex from each cycle edge).
Hypergraph tilde_c2(int k, int p, int q);

/// Triangle with a pendant path of m-3 edges at vertex 0.
Hypergraph lollipop_graph(int m);

/// Triangle with m-3 pendant edges at vertex 0.
Hypergraph triangle_star_graph(int m);

enum class Family {
  loose_path,
  loose_cycle,
  hyperstar,
  c2_star,
  cg_star,
  tilde_c2,
  lollipop_graph,
  triangle_star_graph,
};

// Textual family description used by the CLI, e.g. `tilde-c2:k=3,p=1,q=1` or
// `cg-star:k=3,g=2,t=2/0`.
struct FamilySpec {
  Family family = Family::loose_cycle;
  int k = 3;
  std::optional<int> g;
  std::optional<int> m;
  std::optional<int> p;
  std::optional<int> q;
  std::vector<int> t;

  /// Throws Error(ParseError) on grammar violations and Error(BadParam) on
  /// parameters the family does not accept.
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
  Hypergraph construct() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string_view family_name(Family f) noexcept;

}  // namespace hypertrans
