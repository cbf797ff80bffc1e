#include "hypertrans/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hypertrans/error.hpp"
#include "hypertrans/families.hpp"
#include "hypertrans/transforms.hpp"
#include "parallel.hpp"

namespace hypertrans {

namespace {

void require_hyper(int k, int m) {
  if (k < 3) throw Error(Errc::BadParam, "unicyclic hypergraph bounds need k >= 3 (graphs: graph-remark)");
  if (m < 2) throw Error(Errc::BadParam, "size must be at least 2");
}

Hypergraph shuffled(const Hypergraph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.n()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::string kv(const char* key, long long value) { return std::string(key) + "=" + std::to_string(value); }

std::string join(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

// A connected base hypergraph: hypertree or unicyclic, size in [min_m, max_m].
Hypergraph random_base(int k, int min_m, int max_m, std::mt19937_64& rng) {
  const int m = uniform(rng, min_m, max_m);
  if (m >= min_girth(k) && uniform(rng, 0, 1) == 1) {
    return random_unicyclic(k, m, uniform(rng, min_girth(k), m), rng);
  }
  return random_hypertree(k, m, rng);
}

void finish_trial(LemmaTrial& t) {
  if (t.relation == ">") {
    t.satisfied = t.delta > t.bound;
  } else if (t.relation == ">=") {
    t.satisfied = t.delta >= t.bound && t.delta > 0;
  } else {
    t.satisfied = t.delta == t.bound && t.delta > 0;
  }
}

LemmaTrial trial_split_paths_at_vertex(std::mt19937_64& rng) {
  const int k = uniform(rng, 2, 4);
  auto base = shuffled(random_base(k, 1, 4, rng), rng);
  const Vertex u = uniform(rng, 0, base.n() - 1);
  const int q = uniform(rng, 1, 3);
  const int p = uniform(rng, q, q + 3);
  LemmaTrial t;
  t.params = join({kv("k", k), kv("u", u), kv("p", p), kv("q", q)});
  t.instance = g_u(base, u, p, q);
  t.transformed = g_u(base, u, p + 1, q - 1);
  t.sigma_before = transmission(t.instance);
  t.sigma_after = transmission(t.transformed);
  t.delta = t.sigma_after - t.sigma_before;
  t.relation = ">";
  return t;
}

LemmaTrial trial_split_paths_at_co_edge(std::mt19937_64& rng) {
  while (true) {
    const int k = uniform(rng, 2, 4);
    auto base = shuffled(random_base(k, 2, 4, rng), rng);
    std::vector<Vertex> leaves;
    for (Vertex x = 0; x < base.n(); ++x) {
      if (base.degree(x) == 1) leaves.push_back(x);
    }
    if (leaves.empty()) continue;
    const Vertex u = leaves[uniform(rng, 0, static_cast<int>(leaves.size()) - 1)];
    Edge others;
    for (Vertex x : base.edges()[base.incident_edges(u).front()]) {
      if (x != u) others.push_back(x);
    }
    const Vertex v = others[uniform(rng, 0, static_cast<int>(others.size()) - 1)];
    const int q = uniform(rng, 1, 3);
    const int p = uniform(rng, q, q + 3);
    LemmaTrial t;
    t.params = join({kv("k", k), kv("u", u), kv("v", v), kv("p", p), kv("q", q)});
    t.instance = g_uv(base, u, v, p, q);
    t.transformed = g_uv(base, u, v, p + 1, q - 1);
    t.sigma_before = transmission(t.instance);
    t.sigma_after = transmission(t.transformed);
    t.delta = t.sigma_after - t.sigma_before;
    t.relation = ">";
    return t;
  }
}

LemmaTrial trial_pendant_graft(std::mt19937_64& rng) {
  while (true) {
    const int k = uniform(rng, 2, 5);
    auto base = shuffled(random_base(k, 2, 5, rng), rng);
    auto pendant = pendant_edges(base);
    if (pendant.empty()) continue;
    const EdgeId e = pendant[uniform(rng, 0, static_cast<int>(pendant.size()) - 1)];
    const int s = uniform(rng, 1, k - 1);
    std::vector<RootedHypergraph> hangers;
    for (int i = 0; i < k - 1; ++i) {
      auto h = random_hypertree(k, uniform(rng, 0, 2), rng);
      const Vertex root = uniform(rng, 0, h.n() - 1);
      hangers.push_back({std::move(h), root});
    }
    const bool loaded = std::any_of(hangers.begin(), hangers.begin() + s,
                                    [](const auto& h) { return h.graph.m() >= 1; });
    if (!loaded) {
      auto& h = hangers[uniform(rng, 0, s - 1)];
      h.graph = random_hypertree(k, uniform(rng, 1, 2), rng);
      h.root = uniform(rng, 0, h.graph.n() - 1);
    }
    Sigma bound = 0;
    std::string sizes;
    for (int i = 0; i < k - 1; ++i) {
      if (i < s) bound += static_cast<Sigma>(hangers[i].graph.n() - 1) * (base.n() - k);
      sizes += (i ? "/" : "") + std::to_string(hangers[i].graph.m());
    }
    auto [spread, gathered] = pendant_graft_pair(base, e, s, hangers);
    LemmaTrial t;
    t.params = join({kv("k", k), kv("e", e), kv("s", s), "hanger_edges=" + sizes});
    t.instance = std::move(spread);
    t.transformed = std::move(gathered);
    t.sigma_before = transmission(t.instance);
    t.sigma_after = transmission(t.transformed);
    t.delta = t.sigma_before - t.sigma_after;
    t.relation = ">=";
    t.bound = bound;
    t.extra["base_sigma"] = transmission(base);
    return t;
  }
}

LemmaTrial trial_cycle_collapse(std::mt19937_64& rng) {
  const int k = uniform(rng, 3, 4);
  const int g = uniform(rng, 3, 5);
  const int m = uniform(rng, g, g + 3);
  auto base = shuffled(random_unicyclic(k, m, g, rng), rng);
  auto [first, second] = cycle_collapse_candidates(base);
  LemmaTrial t;
  t.params = join({kv("k", k), kv("m", m), kv("girth", g)});
  t.sigma_before = transmission(base);
  const Sigma s1 = transmission(first);
  const Sigma s2 = transmission(second);
  t.extra["sigma_g1"] = s1;
  t.extra["sigma_g2"] = s2;
  t.instance = base;
  t.transformed = s1 >= s2 ? first : second;
  t.sigma_after = std::max(s1, s2);
  t.delta = t.sigma_after - t.sigma_before;
  t.relation = ">";
  return t;
}

LemmaTrial trial_junction_shift(std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const int k = uniform(rng, 3, 5);
    const int m = uniform(rng, 3, 7);
    auto g = attach_pendant_path(loose_cycle(k, 2), k - 1, 1);
    for (int i = 3; i < m; ++i) g = attach_pendant_path(g, uniform(rng, 0, g.n() - 1), 1);
    g = shuffled(g, rng);
    auto sets = junction_shift_sets(g);
    if (sets.moved.empty() || sets.far_side.size() < sets.near.size()) continue;
    const auto moved = static_cast<Sigma>(sets.moved.size());
    LemmaTrial t;
    t.params = join({kv("k", k), kv("m", m), kv("U1", moved), kv("U2", static_cast<long long>(sets.far_side.size())),
                     kv("H2", static_cast<long long>(sets.near.size()))});
    t.instance = g;
    t.transformed = shift_junction_attachments(g);
    t.sigma_before = transmission(t.instance);
    t.sigma_after = transmission(t.transformed);
    t.delta = t.sigma_after - t.sigma_before;
    t.relation = "=";
    t.bound = moved * (static_cast<Sigma>(sets.far_side.size()) - static_cast<Sigma>(sets.near.size()) + 1);
    return t;
  }
  throw Error(Errc::BadParam, "could not sample an instance meeting the junction-shift hypothesis");
}

// End vertex of the p-path and the attachment vertex of the last q-path edge
// in tilde_c2's labeling.
struct TildeCoordinates {
  Vertex p_end;
  Vertex last_edge_root;
  VertexSet last_edge_rest;
};

TildeCoordinates tilde_coordinates(int k, int p, int q, int n) {
  TildeCoordinates c;
  const int after_p = 2 * k - 2 + p * (k - 1);
  c.p_end = p == 0 ? 1 : after_p - 1;
  c.last_edge_root = q == 1 ? k : n - k;
  for (Vertex x = n - k + 1; x < n; ++x) c.last_edge_rest.push_back(x);
  return c;
}

LemmaTrial tilde_c2_exchange_trial(int k, int p, int q) {
  LemmaTrial t;
  t.params = join({kv("k", k), kv("p", p), kv("q", q)});
  t.instance = tilde_c2(k, p, q);
  t.transformed = tilde_c2(k, p + 1, q - 1);
  t.sigma_before = transmission(t.instance);
  t.sigma_after = transmission(t.transformed);
  t.delta = t.sigma_after - t.sigma_before;
  t.relation = "=";
  t.bound = static_cast<Sigma>(k - 1) * (q - p - 1);

  const Sigma formula = tilde_c2_boundary_formula(k, p, q);
  const Sigma measured = tilde_c2_boundary_bruteforce(k, p, q);
  t.extra["boundary_formula"] = formula;
  t.extra["boundary_bruteforce"] = measured;

  // The same step as an edge move: last q-path edge re-rooted at the p-path end.
  const auto c = tilde_coordinates(k, p, q, t.instance.n());
  Edge last = c.last_edge_rest;
  last.push_back(c.last_edge_root);
  std::sort(last.begin(), last.end());
  const auto moved = move_edges(t.instance, {{*t.instance.find_edge(last)}, c.last_edge_root, c.p_end});
  const bool move_matches = are_isomorphic(moved, t.transformed);
  t.extra["move_isomorphic"] = move_matches ? 1 : 0;
  return t;
}

LemmaTrial trial_tilde_c2_exchange(std::mt19937_64& rng) {
  const int k = uniform(rng, 3, 5);
  const int q = uniform(rng, 3, 9);
  const int p = uniform(rng, 1, std::min(q - 2, 10 - q));
  return tilde_c2_exchange_trial(k, p, q);
}

void finish_tilde_c2_exchange(LemmaTrial& t) {
  finish_trial(t);
  t.satisfied = t.satisfied && t.extra["boundary_formula"] == t.extra["boundary_bruteforce"] &&
                t.extra["move_isomorphic"] == 1;
}

ExtremalReport extremal_report(int k, int m, Direction direction, const Hypergraph& predicted,
                               const std::string& predicted_name, std::optional<Sigma> formula,
                               const EnumerateOptions& options) {
  auto result = enumerate_unicyclic(k, m, options);
  ExtremalReport report;
  report.k = k;
  report.m = m;
  report.direction = direction;
  report.formula_value = formula;
  report.class_count = result.classes.size();
  report.predicted_family = predicted_name;
  report.predicted_value = transmission(predicted);
  const auto winners = direction == Direction::min ? result.argmin() : result.argmax();
  report.enumerated_value = result.classes[winners.front()].sigma;
  for (auto i : winners) {
    const auto& cls = result.classes[i];
    report.extremal_keys.push_back(cls.key);
    report.extremal_graphs.push_back(cls.graph);
    report.extremal_names.push_back(identify_family(cls.graph).value_or("unnamed"));
  }
  report.unique = winners.size() == 1;
  const bool value_ok = report.enumerated_value == report.predicted_value &&
                        (!formula || *formula == report.enumerated_value);
  report.pass = value_ok && report.unique && report.extremal_keys.front() == canonical_key(predicted);
  return report;
}

}  // namespace

Sigma sigma_min_formula(int k, int m) {
  require_hyper(k, m);
  const Sigma n = static_cast<Sigma>(k - 1) * m;
  const Sigma adjacent = static_cast<Sigma>(m) * k * (k - 1) / 2;
  const Sigma pairs = n * (n - 1) / 2;
  const Sigma bound = adjacent + 2 * (pairs - adjacent);
  return m == 3 ? bound : bound + 1;
}

Sigma sigma_max_value(int k, int m) {
  require_hyper(k, m);
  return transmission(tilde_c2(k, (m - 2) / 2, (m - 1) / 2));
}

std::optional<std::string> identify_family(const Hypergraph& g) {
  const int k = g.k();
  const int m = g.m();
  std::vector<FamilySpec> candidates;
  if (m >= min_girth(k)) candidates.push_back({.family = Family::loose_cycle, .k = k, .g = m});
  if (k >= 3 && m >= 2) {
    for (int a = m - 2; a >= 0; --a) {
      candidates.push_back({.family = Family::c2_star, .k = k, .t = {a, m - 2 - a}});
    }
    for (int p = 0; 2 * p <= m - 2; ++p) {
      candidates.push_back({.family = Family::tilde_c2, .k = k, .p = p, .q = m - 2 - p});
    }
  }
  if (k == 2 && m >= 3) {
    candidates.push_back({.family = Family::lollipop_graph, .k = 2, .m = m});
    candidates.push_back({.family = Family::triangle_star_graph, .k = 2, .m = m});
  }
  if (m >= 1) {
    candidates.push_back({.family = Family::hyperstar, .k = k, .m = m});
    candidates.push_back({.family = Family::loose_path, .k = k, .m = m});
  }
  for (const auto& spec : candidates) {
    auto h = spec.construct();
    if (h.n() == g.n() && are_isomorphic(h, g)) return spec.to_string();
  }
  return std::nullopt;
}

ExtremalReport verify_theorem_min(int k, int m, const EnumerateOptions& options) {
  require_hyper(k, m);
  const FamilySpec predicted = m == 3 ? FamilySpec{.family = Family::loose_cycle, .k = k, .g = 3}
                                      : FamilySpec{.family = Family::c2_star, .k = k, .t = {m - 2, 0}};
  return extremal_report(k, m, Direction::min, predicted.construct(), predicted.to_string(),
                         sigma_min_formula(k, m), options);
}

ExtremalReport verify_theorem_max(int k, int m, const EnumerateOptions& options) {
  require_hyper(k, m);
  const FamilySpec predicted{.family = Family::tilde_c2, .k = k, .p = (m - 2) / 2, .q = (m - 1) / 2};
  return extremal_report(k, m, Direction::max, predicted.construct(), predicted.to_string(),
                         std::nullopt, options);
}

GraphRemarkReport graph_remark_check(int m, const EnumerateOptions& options) {
  if (m < 5) throw Error(Errc::BadParam, "the m(m-2) bound is stated for m >= 5");
  auto result = enumerate_unicyclic(2, m, options);
  GraphRemarkReport report;
  report.m = m;
  report.bound = static_cast<Sigma>(m) * (m - 2);
  report.class_count = result.classes.size();
  auto summarize = [&](std::size_t i) {
    const auto& cls = result.classes[i];
    return ClassSummary{cls.key, cls.graph, cls.sigma, diameter(cls.graph), identify_family(cls.graph)};
  };
  for (auto i : result.argmin()) report.minimizers.push_back(summarize(i));
  for (auto i : result.argmax()) report.maximizers.push_back(summarize(i));
  report.min_value = report.minimizers.front().sigma;
  report.max_value = report.maximizers.front().sigma;
  report.bound_attained = report.min_value == report.bound;
  report.minimizers_diameter_le_2 = std::all_of(report.minimizers.begin(), report.minimizers.end(),
                                                [](const auto& c) { return c.diameter <= 2; });

  auto names = [](const std::vector<ClassSummary>& list) {
    std::set<std::string> out;
    for (const auto& c : list) out.insert(c.name.value_or("unnamed"));
    return out;
  };
  const std::string lollipop = FamilySpec{.family = Family::lollipop_graph, .k = 2, .m = m}.to_string();
  const std::string triangle_star = FamilySpec{.family = Family::triangle_star_graph, .k = 2, .m = m}.to_string();
  std::set<std::string> named_min{lollipop};
  if (m == 5) named_min.insert(FamilySpec{.family = Family::loose_cycle, .k = 2, .g = 5}.to_string());
  report.named_minimizer_agrees = names(report.minimizers) == named_min;
  report.named_maximizer_agrees = names(report.maximizers) == std::set<std::string>{triangle_star};

  if (!report.named_minimizer_agrees) {
    std::string found;
    for (const auto& n : names(report.minimizers)) found += (found.empty() ? "" : ", ") + n;
    report.notes.push_back("minimizers are {" + found + "}, not " + lollipop +
                           "; the lollipop has diameter " + std::to_string(diameter(lollipop_graph(m))));
  }
  if (!report.named_maximizer_agrees) {
    std::string found;
    for (const auto& n : names(report.maximizers)) found += (found.empty() ? "" : ", ") + n;
    report.notes.push_back("maximizers are {" + found + "}, not " + triangle_star);
  }
  report.pass = report.bound_attained && report.minimizers_diameter_le_2;
  return report;
}

int LemmaReport::passed() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                        [](const LemmaTrial& t) { return t.satisfied; }));
}

Sigma tilde_c2_boundary_formula(int k, int p, int q) {
  if (k < 3 || p < 0 || q < 1) throw Error(Errc::BadParam, "need k >= 3, p >= 0, q >= 1");
  const Sigma K = k, P = p, Q = q;
  // Twice the bracketed sum; every term is even, see the parity of p(p+5) and q(q+1).
  const Sigma twice = (Q + 1) * Q + (P + 2 * Q + 5) * P +
                      (K - 2) * (P * P + Q * Q + 2 * P * Q + 5 * P + Q - 2) +
                      2 * (2 * K - 3) * (Q + 1) + 2 * (K - 2);
  return (K - 1) * (twice / 2);
}

Sigma tilde_c2_boundary_bruteforce(int k, int p, int q) {
  if (k < 3 || p < 0 || q < 1) throw Error(Errc::BadParam, "need k >= 3, p >= 0, q >= 1");
  const auto g = tilde_c2(k, p, q);
  const auto c = tilde_coordinates(k, p, q, g.n());
  VertexSet rest;
  for (Vertex x = 0; x < g.n() - (k - 1); ++x) rest.push_back(x);
  return sigma_between(g, c.last_edge_rest, rest);
}

LemmaReport check_lemma(int id, int trials, std::uint64_t seed, unsigned threads) {
  if (id < 1 || id > 6) throw Error(Errc::BadLemmaId, "lemma id must be 1..6");
  if (trials < 1) throw Error(Errc::BadParam, "need at least one trial");
  LemmaReport report;
  report.lemma = id;
  report.trials = trials;
  report.seed = seed;
  report.entries.resize(static_cast<std::size_t>(trials));
  detail::parallel_for(report.entries.size(), threads, [&](std::size_t i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    LemmaTrial t;
    switch (id) {
      case 1: t = trial_split_paths_at_vertex(rng); break;
      case 2: t = trial_split_paths_at_co_edge(rng); break;
      case 3: t = trial_pendant_graft(rng); break;
      case 4: t = trial_cycle_collapse(rng); break;
      case 5: t = trial_junction_shift(rng); break;
      default: t = trial_tilde_c2_exchange(rng); break;
    }
    t.index = static_cast<int>(i);
    if (id == 6) {
      finish_tilde_c2_exchange(t);
    } else {
      finish_trial(t);
    }
    report.entries[i] = std::move(t);
  });
  return report;
}

LemmaReport tilde_c2_exchange_exhaustive(std::span<const int> ks, int max_sum) {
  LemmaReport report;
  report.lemma = 6;
  for (int k : ks) {
    for (int q = 3; q + 1 <= max_sum; ++q) {
      for (int p = 1; p <= q - 2 && p + q <= max_sum; ++p) {
        auto t = tilde_c2_exchange_trial(k, p, q);
        t.index = static_cast<int>(report.entries.size());
        finish_tilde_c2_exchange(t);
        report.entries.push_back(std::move(t));
      }
    }
  }
  report.trials = static_cast<int>(report.entries.size());
  return report;
}

}  // namespace hypertrans
