#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hypertrans/canonical.hpp"
#include "hypertrans/hypergraph.hpp"

namespace hypertrans {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct EnumerateOptions {
  /// Cap on generated candidates; exceeding it throws Error(TooLarge).
  std::uint64_t budget = kDefaultBudget;
  /// Worker threads. Output does not depend on this value.
  unsigned threads = 1;
};

struct EnumeratedClass {
  Hypergraph graph;  ///< in canonical labeling
  CanonicalKey key;
  Sigma sigma = 0;
};

struct EnumerationResult {
  int k = 0;
  int m = 0;
  std::uint64_t candidates = 0;
  /// Pairwise non-isomorphic, sorted by (sigma, key).
  std::vector<EnumeratedClass> classes;

  /// Indices of the classes attaining the minimum / maximum sigma.
  std::vector<std::size_t> argmin() const;
  std::vector<std::size_t> argmax() const;
};

/// Every k-uniform unicyclic hypergraph of size m up to isomorphism, grown
/// from each admissible loose cycle by repeatedly attaching pendant edges.
EnumerationResult enumerate_unicyclic(int k, int m, const EnumerateOptions& options = {});

/// Test oracle: every m-subset of k-subsets of m(k-1) labeled vertices that is
/// connected and covers all vertices, deduplicated by canonical key.
EnumerationResult enumerate_unicyclic_bruteforce(int k, int m, const EnumerateOptions& options = {});

/// Candidate counts the two enumerators would generate (saturating).
std::uint64_t constructive_candidate_count(int k, int m);
std::uint64_t bruteforce_candidate_count(int k, int m);

/// Random unicyclic hypergraph: girth uniform over the admissible range, then
/// m - g pendant edges each attached at a uniformly chosen existing vertex.
/// Not uniform over isomorphism classes.
Hypergraph random_unicyclic(int k, int m, std::uint64_t seed);
Hypergraph random_unicyclic(int k, int m, int girth, std::mt19937_64& rng);

/// Random hypertree with m edges (m = 0 gives the single vertex).
Hypergraph random_hypertree(int k, int m, std::mt19937_64& rng);

/// Smallest admissible girth of a k-uniform cycle.
inline int min_girth(int k) { return k == 2 ? 3 : 2; }

}  // namespace hypertrans
