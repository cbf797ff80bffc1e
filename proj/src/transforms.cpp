#include "hypertrans/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "hypertrans/error.hpp"

namespace hypertrans {

namespace {

// Leaves of the vertex/edge incidence graph are peeled until only the cycle
// remains. Returns (junction vertices, cycle edges) flags.
std::pair<std::vector<char>, std::vector<char>> incidence_core(const Hypergraph& g) {
  const int n = g.n();
  const int m = g.m();
  std::vector<int> deg(static_cast<std::size_t>(n + m));
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (EdgeId e = 0; e < m; ++e) deg[n + e] = g.k();
  std::vector<char> alive(deg.size(), 1);
  std::queue<int> leaves;
  for (int node = 0; node < n + m; ++node) {
    if (deg[node] <= 1) leaves.push(node);
  }
  while (!leaves.empty()) {
    int node = leaves.front();
    leaves.pop();
    if (!alive[node]) continue;
    alive[node] = 0;
    auto drop = [&](int other) {
      if (alive[other] && --deg[other] == 1) leaves.push(other);
    };
    if (node < n) {
      for (EdgeId e : g.incident_edges(node)) drop(n + e);
    } else {
      for (Vertex v : g.edges()[node - n]) drop(v);
    }
  }
  return {std::vector<char>(alive.begin(), alive.begin() + n),
          std::vector<char>(alive.begin() + n, alive.end())};
}

void require_k3(const Hypergraph& g) {
  if (g.k() < 3) throw Error(Errc::BadParam, "move defined for k >= 3");
}

}  // namespace

UnicyclicDecomposition decompose(const Hypergraph& g) {
  if (classify(g) != StructureClass::unicyclic) {
    throw Error(Errc::NotUnicyclic, "hypergraph is not unicyclic");
  }
  auto [is_junction, on_cycle] = incidence_core(g);

  UnicyclicDecomposition out;
  out.girth = static_cast<int>(std::count(on_cycle.begin(), on_cycle.end(), 1));

  auto cycle_edges_at = [&](Vertex v) {
    std::vector<EdgeId> found;
    for (EdgeId e : g.incident_edges(v)) {
      if (on_cycle[e]) found.push_back(e);
    }
    return found;  // ascending: incidence lists are built in edge-id order
  };

  const Vertex start = static_cast<Vertex>(
      std::find(is_junction.begin(), is_junction.end(), 1) - is_junction.begin());
  Vertex junction = start;
  EdgeId edge = cycle_edges_at(start).front();
  for (int step = 0; step < out.girth; ++step) {
    out.cycle_edges.push_back(edge);
    out.cycle_vertices.push_back(junction);
    Vertex next = -1;
    for (Vertex x : g.edges()[edge]) {
      if (x == junction) continue;
      if (is_junction[x]) {
        next = x;
      } else {
        out.cycle_vertices.push_back(x);
      }
    }
    auto through_next = cycle_edges_at(next);
    EdgeId next_edge = through_next.front() == edge ? through_next.back() : through_next.front();
    junction = next;
    edge = next_edge;
  }

  std::vector<Edge> rest;
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (!on_cycle[e]) rest.push_back(g.edges()[e]);
  }
  auto pieces = components(Hypergraph::build(g.k(), g.n(), std::move(rest)));
  std::vector<int> piece_of(static_cast<std::size_t>(g.n()));
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (Vertex v : pieces[i]) piece_of[v] = static_cast<int>(i);
  }
  for (Vertex v : out.cycle_vertices) out.attachments.push_back(pieces[piece_of[v]]);
  return out;
}

Hypergraph move_edges(const Hypergraph& g, const MoveSpec& spec) {
  if (spec.from < 0 || spec.from >= g.n() || spec.to < 0 || spec.to >= g.n()) {
    throw Error(Errc::VertexOutOfRange, "move endpoints out of range");
  }
  std::vector<char> moving(static_cast<std::size_t>(g.m()), 0);
  for (EdgeId e : spec.edges) {
    if (e < 0 || e >= g.m()) throw Error(Errc::BadParam, "edge id out of range");
    if (moving[e]) throw Error(Errc::BadParam, "edge listed twice");
    moving[e] = 1;
    const Edge& edge = g.edges()[e];
    if (!g.contains(edge, spec.from)) {
      throw Error(Errc::SourceNotInEdge, "edge " + std::to_string(e) + " misses the source vertex");
    }
    if (g.contains(edge, spec.to)) {
      throw Error(Errc::TargetInEdge, "edge " + std::to_string(e) + " already has the target vertex");
    }
  }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.m(); ++e) {
    Edge edge = g.edges()[e];
    if (moving[e]) {
      std::replace(edge.begin(), edge.end(), spec.from, spec.to);
      std::sort(edge.begin(), edge.end());
    }
    edges.push_back(std::move(edge));
  }
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::CollisionWithExistingEdge, "moved edge coincides with another edge");
  }
  return Hypergraph::build(g.k(), g.n(), std::move(edges));
}

std::pair<Hypergraph, Hypergraph> cycle_collapse_candidates(const Hypergraph& g) {
  require_k3(g);
  auto d = decompose(g);
  if (d.girth < 3) throw Error(Errc::GirthTooSmall, "needs a cycle of length >= 3");
  const int k = g.k();
  const Vertex second_junction = d.cycle_vertices[k - 1];
  const Vertex last_junction = d.cycle_vertices[(d.girth - 1) * (k - 1)];
  auto first = move_edges(g, {{d.cycle_edges.front()}, second_junction, last_junction});
  auto second = move_edges(g, {{d.cycle_edges.back()}, last_junction, second_junction});
  return {std::move(first), std::move(second)};
}

Hypergraph shift_junction_attachments(const Hypergraph& g) {
  require_k3(g);
  auto d = decompose(g);
  if (d.girth != 2) throw Error(Errc::GirthNotTwo, "needs a cycle of length 2");
  const int k = g.k();
  const Vertex from = d.cycle_vertices[k - 1];
  const Vertex to = d.cycle_vertices[1];
  MoveSpec spec{{}, from, to};
  for (EdgeId e : g.incident_edges(from)) {
    if (std::find(d.cycle_edges.begin(), d.cycle_edges.end(), e) == d.cycle_edges.end()) {
      spec.edges.push_back(e);
    }
  }
  if (spec.edges.empty()) throw Error(Errc::NothingToMove, "no attachment edges at the junction");
  return move_edges(g, spec);
}

JunctionShiftSets junction_shift_sets(const Hypergraph& g) {
  require_k3(g);
  auto d = decompose(g);
  if (d.girth != 2) throw Error(Errc::GirthNotTwo, "needs a cycle of length 2");
  const int k = g.k();
  JunctionShiftSets sets;
  for (Vertex v : d.attachments[k - 1]) {
    if (v != d.cycle_vertices[k - 1]) sets.moved.push_back(v);
  }
  for (int i = k; i <= 2 * k - 3; ++i) {
    sets.far_side.insert(sets.far_side.end(), d.attachments[i].begin(), d.attachments[i].end());
  }
  std::sort(sets.far_side.begin(), sets.far_side.end());
  sets.near = d.attachments[1];
  return sets;
}

std::pair<Hypergraph, Hypergraph> pendant_graft_pair(const Hypergraph& g, EdgeId e, int s,
                                                     std::span<const RootedHypergraph> hangers) {
  if (s < 1 || s > g.k() - 1) throw Error(Errc::BadParam, "s must lie in [1, k-1]");
  if (static_cast<int>(hangers.size()) != g.k() - 1) {
    throw Error(Errc::BadParam, "need exactly k-1 rooted hypergraphs");
  }
  const bool has_edges = std::any_of(hangers.begin(), hangers.begin() + s,
                                     [](const RootedHypergraph& h) { return h.graph.m() >= 1; });
  if (!has_edges) throw Error(Errc::BadParam, "some hanger j <= s must have an edge");
  return {graft_at_pendant_edge(g, e, 0, hangers), graft_at_pendant_edge(g, e, s, hangers)};
}

std::vector<EdgeId> pendant_edges(const Hypergraph& g) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.m(); ++e) {
    const auto& edge = g.edges()[e];
    auto branching = std::count_if(edge.begin(), edge.end(), [&](Vertex x) { return g.degree(x) >= 2; });
    if (branching == 1) out.push_back(e);
  }
  return out;
}

}  // namespace hypertrans
