#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hypertrans/hypergraph.hpp"

namespace hypertrans {

/// Lexicographically least encoding of (k, n, m, sorted edge list) over all
/// vertex relabelings; every number is stored as two big-endian bytes so that
/// byte order equals numeric order.
struct CanonicalKey {
  std::string bytes;

  std::string hex() const;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalForm {
  CanonicalKey key;
  /// The input relabeled by `labeling` (old id -> new id).
  Hypergraph graph;
  std::vector<Vertex> labeling;
};

CanonicalForm canonical_form(const Hypergraph& g);
CanonicalKey canonical_key(const Hypergraph& g);

/// Cheap invariant screen (order, size, degree multiset, transmission) then
/// key comparison.
bool are_isomorphic(const Hypergraph& a, const Hypergraph& b);

}  // namespace hypertrans
