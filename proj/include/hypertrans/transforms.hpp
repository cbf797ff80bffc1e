#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hypertrans/families.hpp"
#include "hypertrans/hypergraph.hpp"

namespace hypertrans {

// The unique cycle of a unicyclic hypergraph together with the hypertrees
// hanging off it.
//
// cycle_vertices lists all g(k-1) vertices of the cycle edges: the junction
// shared by cycle_edges[g-1] and cycle_edges[0] first, then the remaining
// vertices of cycle_edges[0] in increasing id order, then the junction shared
// with cycle_edges[1], and so on. Position i(k-1) is always a junction.
// Orientation: the smallest junction id starts the cycle and cycle_edges[0] is
// the smaller-id cycle edge through it.
//
// attachments[i] is the vertex set (sorted, containing cycle_vertices[i]) of
// the component of G - E(cycle) holding cycle_vertices[i].
struct UnicyclicDecomposition {
  int girth = 0;
  std::vector<EdgeId> cycle_edges;
  std::vector<Vertex> cycle_vertices;
  std::vector<VertexSet> attachments;
};

/// Throws Error(NotUnicyclic) unless classify(g) == unicyclic.
UnicyclicDecomposition decompose(const Hypergraph& g);

struct MoveSpec {
  std::vector<EdgeId> edges;
  Vertex from = 0;
  Vertex to = 0;
};

/// Replaces every listed edge e by (e \ {from}) ∪ {to}. The result may be
/// disconnected; colliding edges are an error, never merged.
Hypergraph move_edges(const Hypergraph& g, const MoveSpec& spec);

/// For girth g >= 3 (and k >= 3): first the hypergraph with cycle edge 1
/// moved from cycle vertex k-1 to cycle vertex (g-1)(k-1), then the one with
/// cycle edge g moved the other way (0-based positions in decompose's frame).
/// Both results have girth 2.
std::pair<Hypergraph, Hypergraph> cycle_collapse_candidates(const Hypergraph& g);

/// For girth 2 (and k >= 3): re-roots every attachment edge at the second
/// junction cycle_vertices[k-1] onto cycle_vertices[1].
Hypergraph shift_junction_attachments(const Hypergraph& g);

/// Vertex sets entering the exact σ change of shift_junction_attachments, all
/// taken in the decompose frame of the input:
///   moved    = attachment at cycle_vertices[k-1] minus that vertex,
///   far_side = union of attachments at cycle_vertices[k..2k-3],
///   near     = attachment at cycle_vertices[1].
struct JunctionShiftSets {
  VertexSet moved;
  VertexSet far_side;
  VertexSet near;
};
JunctionShiftSets junction_shift_sets(const Hypergraph& g);

/// (G_{e,0}, G_{e,s}) built with graft_at_pendant_edge. Requires 1 <= s <= k-1
/// and some hanger j < s with at least one edge.
std::pair<Hypergraph, Hypergraph> pendant_graft_pair(const Hypergraph& g, EdgeId e, int s,
                                                     std::span<const RootedHypergraph> hangers);

/// Edges of g with exactly one vertex of degree >= 2.
std::vector<EdgeId> pendant_edges(const Hypergraph& g);

}  // namespace hypertrans
