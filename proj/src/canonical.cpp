#include "hypertrans/canonical.hpp"

#include <algorithm>
#include <cstdint>

#include "hypertrans/error.hpp"

namespace hypertrans {

std::string CanonicalKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xF]);
  }
  return out;
}

namespace {

// Replaces arbitrary integer signatures by their dense ranks.
template <typename Sig>
std::vector<int> dense_ranks(const std::vector<Sig>& sigs) {
  std::vector<int> order(sigs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return sigs[a] < sigs[b]; });
  std::vector<int> rank(sigs.size());
  int current = -1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || sigs[order[i - 1]] < sigs[order[i]]) ++current;
    rank[order[i]] = current;
  }
  return rank;
}

int count_cells(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

// Individualization/refinement search. Vertex colors are ordered cells; a
// leaf is reached when every cell is a singleton, and its colors are the
// labeling. Refinement and cell choice depend on colors only, so the set of
// leaf encodings is relabeling invariant and its minimum is canonical.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Hypergraph& g) : g_(g), twin_(dense_ranks(incidence_lists(g))) {}

  CanonicalForm run() {
    search(std::vector<int>(static_cast<std::size_t>(g_.n()), 0));
    std::vector<Edge> edges;
    for (const auto& e : g_.edges()) {
      Edge mapped;
      for (Vertex x : e) mapped.push_back(best_labels_[x]);
      edges.push_back(std::move(mapped));
    }
    return {CanonicalKey{best_}, Hypergraph::build(g_.k(), g_.n(), std::move(edges)),
            std::vector<Vertex>(best_labels_.begin(), best_labels_.end())};
  }

 private:
  static std::vector<std::vector<EdgeId>> incidence_lists(const Hypergraph& g) {
    std::vector<std::vector<EdgeId>> lists;
    for (Vertex v = 0; v < g.n(); ++v) {
      auto inc = g.incident_edges(v);
      lists.emplace_back(inc.begin(), inc.end());
    }
    return lists;
  }

  std::vector<int> refine(std::vector<int> colors) const {
    int cells = count_cells(colors);
    while (true) {
      std::vector<std::vector<int>> edge_sigs;
      edge_sigs.reserve(g_.edges().size());
      for (const auto& e : g_.edges()) {
        std::vector<int> sig;
        for (Vertex x : e) sig.push_back(colors[x]);
        std::sort(sig.begin(), sig.end());
        edge_sigs.push_back(std::move(sig));
      }
      auto edge_colors = dense_ranks(edge_sigs);
      std::vector<std::vector<int>> vertex_sigs(colors.size());
      for (Vertex v = 0; v < g_.n(); ++v) {
        auto& sig = vertex_sigs[v];
        sig.push_back(colors[v]);
        for (EdgeId e : g_.incident_edges(v)) sig.push_back(edge_colors[e]);
        std::sort(sig.begin() + 1, sig.end());
      }
      auto next = dense_ranks(vertex_sigs);
      int next_cells = count_cells(next);
      if (next_cells == cells) return next;
      colors = std::move(next);
      cells = next_cells;
    }
  }

  std::string encode(const std::vector<int>& labels) const {
    std::vector<Edge> edges;
    edges.reserve(g_.edges().size());
    for (const auto& e : g_.edges()) {
      Edge mapped;
      for (Vertex x : e) mapped.push_back(labels[x]);
      std::sort(mapped.begin(), mapped.end());
      edges.push_back(std::move(mapped));
    }
    std::sort(edges.begin(), edges.end());
    std::string out;
    auto put = [&](int value) {
      out.push_back(static_cast<char>((value >> 8) & 0xFF));
      out.push_back(static_cast<char>(value & 0xFF));
    };
    put(g_.k());
    put(g_.n());
    put(g_.m());
    for (const auto& e : edges) {
      for (Vertex x : e) put(x);
    }
    return out;
  }

  void search(const std::vector<int>& colors) {
    auto refined = refine(colors);
    const int cells = count_cells(refined);
    if (cells == g_.n()) {
      auto code = encode(refined);
      if (!have_best_ || code < best_) {
        best_ = std::move(code);
        best_labels_ = refined;
        have_best_ = true;
      }
      return;
    }
    std::vector<int> size(static_cast<std::size_t>(cells), 0);
    for (int c : refined) ++size[c];
    const int target = static_cast<int>(
        std::find_if(size.begin(), size.end(), [](int s) { return s > 1; }) - size.begin());

    // Twins (same incident edges) are exchanged by an automorphism fixing
    // everything individualized so far; one representative per twin class.
    std::vector<int> tried;
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (refined[v] != target) continue;
      if (std::find(tried.begin(), tried.end(), twin_[v]) != tried.end()) continue;
      tried.push_back(twin_[v]);
      std::vector<int> split(refined.size());
      for (Vertex x = 0; x < g_.n(); ++x) {
        split[x] = 2 * refined[x] + (refined[x] == target && x != v ? 1 : 0);
      }
      search(dense_ranks(split));
    }
  }

  const Hypergraph& g_;
  std::vector<int> twin_;
  std::string best_;
  std::vector<int> best_labels_;
  bool have_best_ = false;
};

std::vector<int> degree_multiset(const Hypergraph& g) {
  std::vector<int> degrees;
  for (Vertex v = 0; v < g.n(); ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace

CanonicalForm canonical_form(const Hypergraph& g) { return Canonicalizer(g).run(); }

CanonicalKey canonical_key(const Hypergraph& g) { return canonical_form(g).key; }

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.k() != b.k() || a.n() != b.n() || a.m() != b.m()) return false;
  if (degree_multiset(a) != degree_multiset(b)) return false;
  const bool connected_a = is_connected(a);
  if (connected_a != is_connected(b)) return false;
  if (connected_a && transmission(a) != transmission(b)) return false;
  return canonical_key(a) == canonical_key(b);
}

}  // namespace hypertrans
