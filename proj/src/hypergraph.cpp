#include "hypertrans/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "hypertrans/error.hpp"

namespace hypertrans {

std::string_view to_string(StructureClass c) noexcept {
  switch (c) {
    case StructureClass::hypertree: return "hypertree";
    case StructureClass::unicyclic: return "unicyclic";
    case StructureClass::other_connected: return "other-connected";
    case StructureClass::disconnected: return "disconnected";
  }
  return "unknown";
}

Hypergraph::Hypergraph(int k, int n, std::vector<Edge> edges)
    : k_(k), n_(n), edges_(std::move(edges)), incidence_(static_cast<std::size_t>(n)) {
  for (EdgeId e = 0; e < m(); ++e) {
    for (Vertex v : edges_[e]) incidence_[v].push_back(e);
  }
}

Hypergraph Hypergraph::build(int k, int n, std::vector<Edge> raw_edges) {
  if (k < 2) throw Error(Errc::BadParam, "uniformity must be at least 2");
  if (n < 1) throw Error(Errc::BadParam, "vertex count must be at least 1");
  for (auto& e : raw_edges) {
    for (Vertex v : e) {
      if (v < 0 || v >= n) {
        throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " not in [0, " +
                                                std::to_string(n) + ")");
      }
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end() || static_cast<int>(e.size()) != k) {
      throw Error(Errc::EdgeWrongSize,
                  "edge must have exactly " + std::to_string(k) + " distinct vertices");
    }
  }
  std::sort(raw_edges.begin(), raw_edges.end());
  if (std::adjacent_find(raw_edges.begin(), raw_edges.end()) != raw_edges.end()) {
    throw Error(Errc::DuplicateEdge, "edge listed twice");
  }
  return Hypergraph(k, n, std::move(raw_edges));
}

const Edge& Hypergraph::edge(EdgeId e) const {
  if (e < 0 || e >= m()) throw Error(Errc::BadParam, "edge id out of range");
  return edges_[e];
}

std::span<const EdgeId> Hypergraph::incident_edges(Vertex v) const {
  if (v < 0 || v >= n_) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
  return incidence_[v];
}

int Hypergraph::degree(Vertex v) const { return static_cast<int>(incident_edges(v).size()); }

std::optional<EdgeId> Hypergraph::find_edge(const Edge& sorted_edge) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), sorted_edge);
  if (it == edges_.end() || *it != sorted_edge) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

bool Hypergraph::contains(const Edge& edge, Vertex v) const {
  return std::binary_search(edge.begin(), edge.end(), v);
}

int DistanceMatrix::diameter() const {
  return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end());
}

namespace {

constexpr int kUnreached = -1;

// Alternating vertex/edge BFS; an edge is expanded once, at the depth of the
// first vertex that reaches it.
std::vector<int> bfs(const Hypergraph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), kUnreached);
  std::vector<char> edge_seen(static_cast<std::size_t>(g.m()), 0);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop();
    for (EdgeId e : g.incident_edges(x)) {
      if (edge_seen[e]) continue;
      edge_seen[e] = 1;
      for (Vertex y : g.edges()[e]) {
        if (dist[y] == kUnreached) {
          dist[y] = dist[x] + 1;
          queue.push(y);
        }
      }
    }
  }
  return dist;
}

void check_vertex(const Hypergraph& g, Vertex v) {
  if (v < 0 || v >= g.n()) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
}

void check_subset(int n, std::span<const Vertex> subset, std::vector<char>& mark) {
  for (Vertex v : subset) {
    if (v < 0 || v >= n) throw Error(Errc::BadSubset, "vertex " + std::to_string(v) + " out of range");
    if (mark[v]) throw Error(Errc::BadSubset, "vertex " + std::to_string(v) + " repeated");
    mark[v] = 1;
  }
}

void check_disjoint(int n, std::span<const Vertex> a_set, std::span<const Vertex> b_set) {
  std::vector<char> in_a(static_cast<std::size_t>(n), 0);
  std::vector<char> in_b(static_cast<std::size_t>(n), 0);
  check_subset(n, a_set, in_a);
  check_subset(n, b_set, in_b);
  for (Vertex b : b_set) {
    if (in_a[b]) throw Error(Errc::Overlap, "vertex " + std::to_string(b) + " in both sets");
  }
}

}  // namespace

bool is_connected(const Hypergraph& g) {
  auto dist = bfs(g, 0);
  return std::find(dist.begin(), dist.end(), kUnreached) == dist.end();
}

StructureClass classify(const Hypergraph& g) {
  if (!is_connected(g)) return StructureClass::disconnected;
  const long long tree_order = static_cast<long long>(g.m()) * (g.k() - 1) + 1;
  if (g.n() == tree_order) return StructureClass::hypertree;
  if (g.n() == tree_order - 1 && (g.k() > 2 || g.m() >= 3)) return StructureClass::unicyclic;
  return StructureClass::other_connected;
}

std::vector<VertexSet> components(const Hypergraph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.n()), kUnreached);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (label[s] != kUnreached) continue;
    auto dist = bfs(g, s);
    VertexSet piece;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (dist[v] != kUnreached) {
        label[v] = static_cast<int>(out.size());
        piece.push_back(v);
      }
    }
    out.push_back(std::move(piece));
  }
  return out;
}

std::vector<int> distances_from(const Hypergraph& g, Vertex u) {
  check_vertex(g, u);
  auto dist = bfs(g, u);
  if (std::find(dist.begin(), dist.end(), kUnreached) != dist.end()) {
    throw Error(Errc::Disconnected, "some vertex is unreachable from " + std::to_string(u));
  }
  return dist;
}

DistanceMatrix all_pairs(const Hypergraph& g) {
  std::vector<int> data;
  data.reserve(static_cast<std::size_t>(g.n()) * g.n());
  for (Vertex u = 0; u < g.n(); ++u) {
    auto row = distances_from(g, u);
    data.insert(data.end(), row.begin(), row.end());
  }
  return DistanceMatrix(g.n(), std::move(data));
}

int diameter(const Hypergraph& g) { return all_pairs(g).diameter(); }

Sigma transmission(const DistanceMatrix& d) {
  Sigma total = 0;
  for (Vertex u = 0; u < d.n(); ++u) {
    for (Vertex v = u + 1; v < d.n(); ++v) total += d.at(u, v);
  }
  return total;
}

Sigma transmission(const Hypergraph& g) { return transmission(all_pairs(g)); }

Sigma sigma_vertex(const Hypergraph& g, Vertex u) {
  auto row = distances_from(g, u);
  return std::accumulate(row.begin(), row.end(), Sigma{0});
}

Sigma sigma_subset(const DistanceMatrix& d, std::span<const Vertex> subset) {
  std::vector<char> mark(static_cast<std::size_t>(d.n()), 0);
  check_subset(d.n(), subset, mark);
  Sigma total = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) total += d.at(subset[i], subset[j]);
  }
  return total;
}

Sigma sigma_subset(const Hypergraph& g, std::span<const Vertex> subset) {
  std::vector<char> mark(static_cast<std::size_t>(g.n()), 0);
  check_subset(g.n(), subset, mark);
  if (subset.size() < 2) return 0;
  return sigma_subset(all_pairs(g), subset);
}

Sigma sigma_between(const DistanceMatrix& d, std::span<const Vertex> a_set,
                    std::span<const Vertex> b_set) {
  check_disjoint(d.n(), a_set, b_set);
  Sigma total = 0;
  for (Vertex a : a_set) {
    for (Vertex b : b_set) total += d.at(a, b);
  }
  return total;
}

Sigma sigma_between(const Hypergraph& g, std::span<const Vertex> a_set,
                    std::span<const Vertex> b_set) {
  check_disjoint(g.n(), a_set, b_set);
  if (a_set.empty() || b_set.empty()) return 0;
  return sigma_between(all_pairs(g), a_set, b_set);
}

Rational average_distance(const Hypergraph& g) {
  if (g.n() < 2) throw Error(Errc::BadParam, "average distance needs at least two vertices");
  const auto n = static_cast<std::int64_t>(g.n());
  return Rational(2 * transmission(g), n * (n - 1));
}

Hypergraph delete_edge(const Hypergraph& g, EdgeId e) {
  if (e < 0 || e >= g.m()) throw Error(Errc::BadParam, "edge id out of range");
  auto edges = g.edges();
  edges.erase(edges.begin() + e);
  return Hypergraph::build(g.k(), g.n(), std::move(edges));
}

Hypergraph delete_vertex(const Hypergraph& g, Vertex v) {
  check_vertex(g, v);
  if (g.n() == 1) throw Error(Errc::BadParam, "cannot delete the only vertex");
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (g.contains(e, v)) continue;
    Edge mapped;
    for (Vertex x : e) mapped.push_back(x > v ? x - 1 : x);
    edges.push_back(std::move(mapped));
  }
  return Hypergraph::build(g.k(), g.n() - 1, std::move(edges));
}

Hypergraph induced_subhypergraph(const Hypergraph& g, std::span<const Vertex> subset) {
  std::vector<char> mark(static_cast<std::size_t>(g.n()), 0);
  check_subset(g.n(), subset, mark);
  if (subset.empty()) throw Error(Errc::BadSubset, "induced subhypergraph needs a nonempty set");
  VertexSet sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Vertex> index(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (std::all_of(e.begin(), e.end(), [&](Vertex x) { return mark[x] != 0; })) {
      Edge mapped;
      for (Vertex x : e) mapped.push_back(index[x]);
      edges.push_back(std::move(mapped));
    }
  }
  return Hypergraph::build(g.k(), static_cast<int>(sorted.size()), std::move(edges));
}

Hypergraph relabel(const Hypergraph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw Error(Errc::BadParam, "permutation size mismatch");
  std::vector<char> seen(perm.size(), 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= g.n() || seen[p]) throw Error(Errc::BadParam, "not a permutation");
    seen[p] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) {
    Edge mapped;
    for (Vertex x : e) mapped.push_back(perm[x]);
    edges.push_back(std::move(mapped));
  }
  return Hypergraph::build(g.k(), g.n(), std::move(edges));
}

}  // namespace hypertrans
