#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypertrans/canonical.hpp"
#include "hypertrans/enumerate.hpp"
#include "hypertrans/hypergraph.hpp"

namespace hypertrans {

/// Least transmission of a k-uniform unicyclic hypergraph of size m (k >= 3):
/// m*C(k,2) pairs at distance 1 and all others at distance 2, plus one when
/// m != 3 (the two cycle edges then share two vertices).
Sigma sigma_min_formula(int k, int m);

/// Transmission of tilde_c2(k, floor((m-2)/2), ceil((m-2)/2)).
Sigma sigma_max_value(int k, int m);

/// FamilySpec string of a named family isomorphic to g, if any.
std::optional<std::string> identify_family(const Hypergraph& g);

enum class Direction { min, max };

struct ExtremalReport {
  int k = 0;
  int m = 0;
  Direction direction = Direction::min;
  std::optional<Sigma> formula_value;
  Sigma enumerated_value = 0;
  std::vector<CanonicalKey> extremal_keys;
  bool unique = false;
  bool pass = false;

  std::string predicted_family;
  Sigma predicted_value = 0;
  std::size_t class_count = 0;
  std::vector<Hypergraph> extremal_graphs;
  std::vector<std::string> extremal_names;
};

/// Enumerates and checks the minimizer: C_{3k-3,k} when m = 3, otherwise the
/// 2-cycle with m-2 pendant edges at a shared vertex.
ExtremalReport verify_theorem_min(int k, int m, const EnumerateOptions& options = {});

/// Enumerates and checks the maximizer tilde_c2(k, floor((m-2)/2), ceil((m-2)/2)).
ExtremalReport verify_theorem_max(int k, int m, const EnumerateOptions& options = {});

struct ClassSummary {
  CanonicalKey key;
  Hypergraph graph;
  Sigma sigma = 0;
  int diameter = 0;
  std::optional<std::string> name;
};

// Unicyclic graphs (k = 2): lower bound m(m-2), attained exactly by the graphs
// of diameter at most 2. The report also compares the extremal classes with
// the named candidates from the literature: the lollipop (triangle plus a
// pendant path) as minimizer, the triangle with m-3 pendant edges at one
// vertex as maximizer.
struct GraphRemarkReport {
  int m = 0;
  Sigma bound = 0;
  Sigma min_value = 0;
  Sigma max_value = 0;
  std::size_t class_count = 0;
  std::vector<ClassSummary> minimizers;
  std::vector<ClassSummary> maximizers;
  bool bound_attained = false;
  bool minimizers_diameter_le_2 = false;
  bool named_minimizer_agrees = false;
  bool named_maximizer_agrees = false;
  std::vector<std::string> notes;
  bool pass = false;
};

GraphRemarkReport graph_remark_check(int m, const EnumerateOptions& options = {});

struct LemmaTrial {
  int index = 0;
  std::string params;
  Hypergraph instance;     ///< hypergraph before the change
  Hypergraph transformed;  ///< hypergraph after the change
  Sigma sigma_before = 0;
  Sigma sigma_after = 0;
  Sigma delta = 0;
  std::string relation;  ///< ">", ">=" or "=" between delta and bound
  Sigma bound = 0;
  std::map<std::string, Sigma> extra;
  bool satisfied = false;
};

struct LemmaReport {
  int lemma = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<LemmaTrial> entries;

  int passed() const;
  bool pass() const { return passed() == trials; }
};

/// Draws `trials` random instances satisfying the hypotheses of lemma `id`
/// (1..6) and checks its conclusion on each. Trial i depends only on
/// (id, seed, i).
///   1: σ(G_u(p,q)) < σ(G_u(p+1,q-1)),           p >= q >= 1
///   2: σ(G_{u,v}(p,q)) < σ(G_{u,v}(p+1,q-1)),    d(u) = 1, p >= q >= 1
///   3: σ(G_{e,0}) - σ(G_{e,s}) >= Σ_{i<=s}|V_i \ root|·(|V(G)|-k) > 0
///   4: σ(G1*) > σ(G) or σ(G2*) > σ(G),          girth >= 3
///   5: σ(G*) - σ(G) = |U1|(|U2| - |V(H2)| + 1) > 0
///   6: σ(tilde_c2(p+1,q-1)) - σ(tilde_c2(p,q)) = (k-1)(q-p-1) and the
///      boundary sum from the last path edge matches its closed form.
LemmaReport check_lemma(int id, int trials, std::uint64_t seed, unsigned threads = 1);

/// Closed form of σ_G(f_q \ {v_{q-1}}, U) for G = tilde_c2(k, p, q), where f_q
/// is the last edge of the q-path.
Sigma tilde_c2_boundary_formula(int k, int p, int q);

/// The same quantity measured on the hypergraph by distance sums.
Sigma tilde_c2_boundary_bruteforce(int k, int p, int q);

/// The check_lemma id 6 conclusion for every k in ks and 1 <= p <= q-2,
/// p+q <= max_sum.
LemmaReport tilde_c2_exchange_exhaustive(std::span<const int> ks, int max_sum);

}  // namespace hypertrans
