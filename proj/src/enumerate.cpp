#include "hypertrans/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "hypertrans/error.hpp"
#include "hypertrans/families.hpp"
#include "parallel.hpp"

namespace hypertrans {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return b > kSaturated - a ? kSaturated : a + b;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // result * (n - r + i) / i stays integral at every step
    const std::uint64_t factor = n - r + i;
    if (result > kSaturated / factor) return kSaturated;
    result = result * factor / i;
  }
  return result;
}

void check_params(int k, int m) {
  if (k < 2) throw Error(Errc::BadParam, "k must be at least 2");
  if (m < min_girth(k)) {
    throw Error(Errc::BadParam, "size must be at least " + std::to_string(min_girth(k)));
  }
}

void check_budget(std::uint64_t count, std::uint64_t budget) {
  if (count > budget) {
    throw Error(Errc::TooLarge, std::to_string(count) + " candidates exceed budget " +
                                    std::to_string(budget));
  }
}

using ClassMap = std::map<CanonicalKey, Hypergraph>;

void insert_class(ClassMap& classes, const Hypergraph& g) {
  auto form = canonical_form(g);
  classes.try_emplace(std::move(form.key), std::move(form.graph));
}

EnumerationResult finish(int k, int m, std::uint64_t candidates, std::vector<ClassMap>& parts) {
  ClassMap merged;
  for (auto& part : parts) merged.merge(part);
  EnumerationResult result;
  result.k = k;
  result.m = m;
  result.candidates = candidates;
  for (auto& [key, graph] : merged) {
    Sigma sigma = transmission(graph);
    result.classes.push_back({std::move(graph), key, sigma});
  }
  std::sort(result.classes.begin(), result.classes.end(), [](const auto& a, const auto& b) {
    return a.sigma != b.sigma ? a.sigma < b.sigma : a.key < b.key;
  });
  return result;
}

// Depth-first: every way of adding `remaining` pendant edges to the current
// edge list, one new edge at a time at any existing vertex.
void grow(int k, int n, std::vector<Edge>& edges, int remaining, ClassMap& out) {
  if (remaining == 0) {
    insert_class(out, Hypergraph::build(k, n, edges));
    return;
  }
  for (Vertex u = 0; u < n; ++u) {
    Edge e{u};
    for (int i = 0; i < k - 1; ++i) e.push_back(n + i);
    edges.push_back(std::move(e));
    grow(k, n + k - 1, edges, remaining - 1, out);
    edges.pop_back();
  }
}

}  // namespace

std::vector<std::size_t> EnumerationResult::argmin() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].sigma == classes.front().sigma) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> EnumerationResult::argmax() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].sigma == classes.back().sigma) out.push_back(i);
  }
  return out;
}

std::uint64_t constructive_candidate_count(int k, int m) {
  check_params(k, m);
  std::uint64_t total = 0;
  for (int g = min_girth(k); g <= m; ++g) {
    std::uint64_t leaves = 1;
    for (int j = 0; j < m - g; ++j) {
      leaves = saturating_mul(leaves, static_cast<std::uint64_t>(g + j) * (k - 1));
    }
    total = saturating_add(total, leaves);
  }
  return total;
}

std::uint64_t bruteforce_candidate_count(int k, int m) {
  check_params(k, m);
  const std::uint64_t n = static_cast<std::uint64_t>(m) * (k - 1);
  return binomial(binomial(n, static_cast<std::uint64_t>(k)), static_cast<std::uint64_t>(m));
}

EnumerationResult enumerate_unicyclic(int k, int m, const EnumerateOptions& options) {
  const auto candidates = constructive_candidate_count(k, m);
  check_budget(candidates, options.budget);
  const int first = min_girth(k);
  std::vector<ClassMap> parts(static_cast<std::size_t>(m - first + 1));
  detail::parallel_for(parts.size(), options.threads, [&](std::size_t i) {
    const int g = first + static_cast<int>(i);
    auto cycle = loose_cycle(k, g);
    auto edges = cycle.edges();
    grow(k, cycle.n(), edges, m - g, parts[i]);
  });
  return finish(k, m, candidates, parts);
}

EnumerationResult enumerate_unicyclic_bruteforce(int k, int m, const EnumerateOptions& options) {
  const auto candidates = bruteforce_candidate_count(k, m);
  check_budget(candidates, options.budget);
  const int n = m * (k - 1);
  if (n > 63) throw Error(Errc::TooLarge, "brute force supports at most 63 vertices");

  std::vector<Edge> subsets;
  std::vector<std::uint64_t> masks;
  Edge current;
  auto collect = [&](auto& self, Vertex next) -> void {
    if (static_cast<int>(current.size()) == k) {
      std::uint64_t mask = 0;
      for (Vertex x : current) mask |= std::uint64_t{1} << x;
      subsets.push_back(current);
      masks.push_back(mask);
      return;
    }
    for (Vertex v = next; v < n; ++v) {
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  collect(collect, 0);

  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const int total = static_cast<int>(subsets.size());
  std::vector<ClassMap> parts(subsets.size());
  detail::parallel_for(subsets.size(), options.threads, [&](std::size_t first) {
    std::vector<int> chosen{static_cast<int>(first)};
    auto connected = [&] {
      std::uint64_t reached = masks[chosen[0]];
      std::uint32_t merged = 1;
      const std::uint32_t all = (std::uint32_t{1} << chosen.size()) - 1;
      bool progress = true;
      while (progress && merged != all) {
        progress = false;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
          if (!(merged >> i & 1) && (masks[chosen[i]] & reached)) {
            reached |= masks[chosen[i]];
            merged |= std::uint32_t{1} << i;
            progress = true;
          }
        }
      }
      return merged == all;
    };
    auto pick = [&](auto& self, int next, std::uint64_t cover) -> void {
      if (static_cast<int>(chosen.size()) == m) {
        if (cover == full && connected()) {
          std::vector<Edge> edges;
          for (int id : chosen) edges.push_back(subsets[id]);
          insert_class(parts[first], Hypergraph::build(k, n, std::move(edges)));
        }
        return;
      }
      for (int id = next; id < total; ++id) {
        chosen.push_back(id);
        self(self, id + 1, cover | masks[id]);
        chosen.pop_back();
      }
    };
    pick(pick, static_cast<int>(first) + 1, masks[first]);
  });
  return finish(k, m, candidates, parts);
}

Hypergraph random_hypertree(int k, int m, std::mt19937_64& rng) {
  if (k < 2 || m < 0) throw Error(Errc::BadParam, "need k >= 2 and m >= 0");
  auto g = hyperstar(k, 0);
  for (int i = 0; i < m; ++i) {
    std::uniform_int_distribution<Vertex> pick(0, g.n() - 1);
    g = attach_pendant_path(g, pick(rng), 1);
  }
  return g;
}

Hypergraph random_unicyclic(int k, int m, int girth, std::mt19937_64& rng) {
  check_params(k, m);
  if (girth < min_girth(k) || girth > m) throw Error(Errc::BadParam, "girth out of range");
  auto g = loose_cycle(k, girth);
  for (int i = girth; i < m; ++i) {
    std::uniform_int_distribution<Vertex> pick(0, g.n() - 1);
    g = attach_pendant_path(g, pick(rng), 1);
  }
  return g;
}

Hypergraph random_unicyclic(int k, int m, std::uint64_t seed) {
  check_params(k, m);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> girth(min_girth(k), m);
  return random_unicyclic(k, m, girth(rng), rng);
}

}  // namespace hypertrans
