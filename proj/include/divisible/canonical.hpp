#pragma once

#include <cstdint>
#include <vector>

#include "divisible/graph.hpp"

namespace divisible {

/// Canonical relabelling: two graphs are isomorphic iff their canonical
/// graphs are equal.
///
/// Colour refinement followed by individualisation of each vertex of the
/// first non-singleton cell; the lexicographically smallest adjacency rows
/// over all leaves win. No automorphism pruning, so highly symmetric graphs
/// cost up to n! leaves; intended for n <= 10.
struct CanonicalForm {
  Graph graph;
  /// canonical vertex i is input vertex labeling[i].
  std::vector<int> labeling;
};

CanonicalForm canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace divisible
