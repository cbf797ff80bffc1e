#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace hypertrans {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;
/// Strictly increasing list of vertex ids.
using Edge = std::vector<Vertex>;
using VertexSet = std::vector<Vertex>;
using Sigma = std::int64_t;
using Rational = boost::rational<std::int64_t>;

enum class StructureClass { hypertree, unicyclic, other_connected, disconnected };

std::string_view to_string(StructureClass c) noexcept;

// A k-uniform hypergraph on vertices 0..n-1 kept in normal form: every edge
// sorted, the edge list sorted lexicographically. Two values compare equal
// iff they describe the same labeled hypergraph.
class Hypergraph {
 public:
  /// The single vertex with no edges (k = 2).
  Hypergraph() : Hypergraph(2, 1, {}) {}

  /// Validates and normalizes. Throws Error(EdgeWrongSize | VertexOutOfRange |
  /// DuplicateEdge | BadParam); never repairs input.
  static Hypergraph build(int k, int n, std::vector<Edge> raw_edges);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const;

  std::span<const EdgeId> incident_edges(Vertex v) const;
  int degree(Vertex v) const;

  /// Id of the edge equal to `sorted_edge`, if present.
  std::optional<EdgeId> find_edge(const Edge& sorted_edge) const;
  bool contains(const Edge& edge, Vertex v) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Hypergraph(int k, int n, std::vector<Edge> edges);

  int k_ = 2;
  int n_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<int> data) : n_(n), data_(std::move(data)) {}

  int n() const noexcept { return n_; }
  int at(Vertex u, Vertex v) const { return data_[static_cast<std::size_t>(u) * n_ + v]; }
  std::span<const int> row(Vertex u) const {
    return {data_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
  }
  int diameter() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  int n_;
  std::vector<int> data_;
};

bool is_connected(const Hypergraph& g);
StructureClass classify(const Hypergraph& g);

/// Maximal connected vertex sets; each sorted, list ordered by minimum vertex.
std::vector<VertexSet> components(const Hypergraph& g);

/// BFS over the vertex/edge incidence structure. Throws Disconnected if some
/// vertex is unreachable from u.
std::vector<int> distances_from(const Hypergraph& g, Vertex u);
DistanceMatrix all_pairs(const Hypergraph& g);
int diameter(const Hypergraph& g);

Sigma transmission(const Hypergraph& g);
Sigma transmission(const DistanceMatrix& d);
Sigma sigma_vertex(const Hypergraph& g, Vertex u);
/// Sum over unordered pairs inside `subset`.
Sigma sigma_subset(const Hypergraph& g, std::span<const Vertex> subset);
Sigma sigma_subset(const DistanceMatrix& d, std::span<const Vertex> subset);
/// Sum over a in a_set, b in b_set; the sets must be disjoint.
Sigma sigma_between(const Hypergraph& g, std::span<const Vertex> a_set,
                    std::span<const Vertex> b_set);
Sigma sigma_between(const DistanceMatrix& d, std::span<const Vertex> a_set,
                    std::span<const Vertex> b_set);
/// 2*sigma / (n(n-1)) as an exact fraction. Requires n >= 2.
Rational average_distance(const Hypergraph& g);

Hypergraph delete_edge(const Hypergraph& g, EdgeId e);
/// Removes v together with every edge through it; surviving vertices are
/// renumbered 0..n-2 keeping their relative order.
Hypergraph delete_vertex(const Hypergraph& g, Vertex v);
/// G[X]: vertices X (renumbered in increasing order) and every edge inside X.
Hypergraph induced_subhypergraph(const Hypergraph& g, std::span<const Vertex> subset);
/// Applies the vertex map old -> perm[old].
Hypergraph relabel(const Hypergraph& g, std::span<const Vertex> perm);

}  // namespace hypertrans
