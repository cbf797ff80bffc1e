#include "hypertrans/families.hpp"

#include <algorithm>
#include <charconv>

#include "hypertrans/error.hpp"

namespace hypertrans {

namespace {

// Mutable edge list that only ever grows by appending fresh vertices.
class Growth {
 public:
  explicit Growth(const Hypergraph& base) : k_(base.k()), n_(base.n()), edges_(base.edges()) {}
  Growth(int k, int n) : k_(k), n_(n) {}

  /// Adds {u, n, ..., n+k-2} and returns its last new vertex.
  Vertex add_pendant_edge(Vertex u) {
    Edge e{u};
    for (int i = 0; i < k_ - 1; ++i) e.push_back(n_++);
    edges_.push_back(e);
    return e.back();
  }

  void add_path(Vertex u, int length) {
    for (int i = 0; i < length; ++i) u = add_pendant_edge(u);
  }

  void add_star(Vertex center, int count) {
    for (int i = 0; i < count; ++i) add_pendant_edge(center);
  }

  Hypergraph finish() && { return Hypergraph::build(k_, n_, std::move(edges_)); }

 private:
  int k_;
  int n_;
  std::vector<Edge> edges_;
};

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::BadParam, what);
}

void check_vertex(const Hypergraph& g, Vertex v) {
  if (v < 0 || v >= g.n()) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
}

void check_cycle_params(int k, int g) {
  require(k >= 2, "k must be at least 2");
  require(k == 2 ? g >= 3 : g >= 2, "cycle length must be >= 2 (>= 3 for graphs)");
}

}  // namespace

Hypergraph loose_path(int k, int m) {
  require(k >= 2, "k must be at least 2");
  require(m >= 1, "path needs at least one edge");
  Growth growth(k, 1);
  growth.add_path(0, m);
  return std::move(growth).finish();
}

Hypergraph loose_cycle(int k, int g) {
  check_cycle_params(k, g);
  const int n = g * (k - 1);
  std::vector<Edge> edges;
  for (int i = 0; i < g; ++i) {
    Edge e;
    for (int j = 0; j < k; ++j) e.push_back((i * (k - 1) + j) % n);
    edges.push_back(std::move(e));
  }
  return Hypergraph::build(k, n, std::move(edges));
}

Hypergraph hyperstar(int k, int t) {
  require(k >= 2, "k must be at least 2");
  require(t >= 0, "edge count must be nonnegative");
  Growth growth(k, 1);
  growth.add_star(0, t);
  return std::move(growth).finish();
}

Hypergraph attach_pendant_path(const Hypergraph& g, Vertex u, int p) {
  check_vertex(g, u);
  require(p >= 0, "path length must be nonnegative");
  Growth growth(g);
  growth.add_path(u, p);
  return std::move(growth).finish();
}

Hypergraph g_u(const Hypergraph& g, Vertex u, int p, int q) {
  require(g.m() >= 1, "base hypergraph needs an edge");
  require(p >= 1 && q >= 0, "need p >= 1 and q >= 0");
  check_vertex(g, u);
  Growth growth(g);
  growth.add_path(u, p);
  growth.add_path(u, q);
  return std::move(growth).finish();
}

Hypergraph g_uv(const Hypergraph& g, Vertex u, Vertex v, int p, int q) {
  check_vertex(g, u);
  check_vertex(g, v);
  require(p >= 0 && q >= 0, "path lengths must be nonnegative");
  const bool co_edge =
      u != v && std::any_of(g.edges().begin(), g.edges().end(),
                            [&](const Edge& e) { return g.contains(e, u) && g.contains(e, v); });
  if (!co_edge) throw Error(Errc::NotCoEdge, "u and v must be distinct vertices of one edge");
  Growth growth(g);
  growth.add_path(u, p);
  growth.add_path(v, q);
  return std::move(growth).finish();
}

Hypergraph graft_at_pendant_edge(const Hypergraph& g, EdgeId e, int s,
                                 std::span<const RootedHypergraph> hangers) {
  const int k = g.k();
  if (e < 0 || e >= g.m()) throw Error(Errc::BadParam, "edge id out of range");
  require(static_cast<int>(hangers.size()) == k - 1, "need exactly k-1 rooted hypergraphs");
  require(s >= 0 && s <= k - 1, "s must lie in [0, k-1]");

  const Edge& edge = g.edge(e);
  Vertex anchor = edge.back();
  if (g.m() >= 2) {
    std::vector<Vertex> branching;
    for (Vertex x : edge) {
      if (g.degree(x) >= 2) branching.push_back(x);
    }
    if (branching.size() != 1) {
      throw Error(Errc::NotPendantEdge, "edge must have exactly one vertex of degree >= 2");
    }
    anchor = branching.front();
  }
  std::vector<Vertex> free_vertices;
  for (Vertex x : edge) {
    if (x != anchor) free_vertices.push_back(x);
  }

  int n = g.n();
  std::vector<Edge> edges = g.edges();
  for (int i = 0; i < k - 1; ++i) {
    const auto& hanger = hangers[i];
    require(hanger.graph.m() == 0 || hanger.graph.k() == k, "rooted hypergraph has a different uniformity");
    check_vertex(hanger.graph, hanger.root);
    std::vector<Vertex> map(static_cast<std::size_t>(hanger.graph.n()));
    for (Vertex x = 0; x < hanger.graph.n(); ++x) {
      map[x] = x == hanger.root ? (i < s ? anchor : free_vertices[i]) : n++;
    }
    for (const auto& he : hanger.graph.edges()) {
      Edge mapped;
      for (Vertex x : he) mapped.push_back(map[x]);
      edges.push_back(std::move(mapped));
    }
  }
  return Hypergraph::build(k, n, std::move(edges));
}

Hypergraph cg_star(int k, int g, std::span<const int> star_edges) {
  check_cycle_params(k, g);
  require(static_cast<int>(star_edges.size()) == g, "need one star size per cycle edge");
  Growth growth(loose_cycle(k, g));
  for (int i = 0; i < g; ++i) {
    require(star_edges[i] >= 0, "star sizes must be nonnegative");
    growth.add_star(i * (k - 1), star_edges[i]);
  }
  return std::move(growth).finish();
}

Hypergraph tilde_c2(int k, int p, int q) {
  require(k >= 3, "tilde-c2 needs k >= 3");
  require(p >= 0 && q >= 0, "path lengths must be nonnegative");
  Growth growth(loose_cycle(k, 2));
  growth.add_path(1, p);
  growth.add_path(k, q);
  return std::move(growth).finish();
}

Hypergraph lollipop_graph(int m) {
  require(m >= 3, "need m >= 3");
  return attach_pendant_path(loose_cycle(2, 3), 0, m - 3);
}

Hypergraph triangle_star_graph(int m) {
  require(m >= 3, "need m >= 3");
  const int stars[] = {m - 3, 0, 0};
  return cg_star(2, 3, stars);
}

// ---------------------------------------------------------------------------
// FamilySpec

namespace {

constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::loose_path, "loose-path"},
    {Family::loose_cycle, "loose-cycle"},
    {Family::hyperstar, "hyperstar"},
    {Family::c2_star, "c2-star"},
    {Family::cg_star, "cg-star"},
    {Family::tilde_c2, "tilde-c2"},
    {Family::lollipop_graph, "lollipop"},
    {Family::triangle_star_graph, "triangle-star"},
};

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::ParseError, what); }

int parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    parse_fail("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Keys each family requires (all required, nothing else accepted).
std::string_view required_keys(Family f) {
  switch (f) {
    case Family::loose_path: return "km";
    case Family::loose_cycle: return "kg";
    case Family::hyperstar: return "km";
    case Family::c2_star: return "kt";
    case Family::cg_star: return "kgt";
    case Family::tilde_c2: return "kpq";
    case Family::lollipop_graph: return "km";
    case Family::triangle_star_graph: return "km";
  }
  return "";
}

}  // namespace

std::string_view family_name(Family f) noexcept {
  for (auto [family, name] : kFamilyNames) {
    if (family == f) return name;
  }
  return "unknown";
}

FamilySpec FamilySpec::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) parse_fail("expected <family>:<params>");
  auto name = text.substr(0, colon);
  FamilySpec spec;
  auto it = std::find_if(std::begin(kFamilyNames), std::end(kFamilyNames),
                         [&](const auto& entry) { return entry.second == name; });
  if (it == std::end(kFamilyNames)) parse_fail("unknown family '" + std::string(name) + "'");
  spec.family = it->first;

  std::string seen;
  for (auto item : split(text.substr(colon + 1), ',')) {
    auto eq = item.find('=');
    if (eq == std::string_view::npos || eq != 1) parse_fail("expected key=value, got '" + std::string(item) + "'");
    const char key = item[0];
    auto value = item.substr(2);
    if (seen.find(key) != std::string::npos) parse_fail(std::string("duplicate key ") + key);
    seen.push_back(key);
    switch (key) {
      case 'k': spec.k = parse_int(value); break;
      case 'g': spec.g = parse_int(value); break;
      case 'm': spec.m = parse_int(value); break;
      case 'p': spec.p = parse_int(value); break;
      case 'q': spec.q = parse_int(value); break;
      case 't':
        for (auto part : split(value, '/')) spec.t.push_back(parse_int(part));
        break;
      default: parse_fail(std::string("unknown key ") + key);
    }
  }
  auto required = required_keys(spec.family);
  for (char key : seen) {
    if (required.find(key) == std::string_view::npos) {
      parse_fail(std::string("key ") + key + " not accepted by " + std::string(name));
    }
  }
  for (char key : required) {
    if (seen.find(key) == std::string::npos) {
      parse_fail(std::string("missing key ") + key + " for " + std::string(name));
    }
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out(family_name(family));
  out += ":k=" + std::to_string(k);
  if (g) out += ",g=" + std::to_string(*g);
  if (m) out += ",m=" + std::to_string(*m);
  if (p) out += ",p=" + std::to_string(*p);
  if (q) out += ",q=" + std::to_string(*q);
  if (!t.empty()) {
    out += ",t=";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += '/';
      out += std::to_string(t[i]);
    }
  }
  return out;
}

Hypergraph FamilySpec::construct() const {
  auto need = [](const std::optional<int>& v, const char* key) {
    if (!v) throw Error(Errc::BadParam, std::string("missing parameter ") + key);
    return *v;
  };
  switch (family) {
    case Family::loose_path: return loose_path(k, need(m, "m"));
    case Family::loose_cycle: return loose_cycle(k, need(g, "g"));
    case Family::hyperstar: return hyperstar(k, need(m, "m"));
    case Family::c2_star:
      require(t.size() == 2, "c2-star takes exactly two star sizes");
      return cg_star(k, 2, t);
    case Family::cg_star: return cg_star(k, need(g, "g"), t);
    case Family::tilde_c2: return tilde_c2(k, need(p, "p"), need(q, "q"));
    case Family::lollipop_graph:
      require(k == 2, "lollipop is a graph family (k=2)");
      return lollipop_graph(need(m, "m"));
    case Family::triangle_star_graph:
      require(k == 2, "triangle-star is a graph family (k=2)");
      return triangle_star_graph(need(m, "m"));
  }
  throw Error(Errc::BadParam, "unknown family");
}

}  // namespace hypertrans
