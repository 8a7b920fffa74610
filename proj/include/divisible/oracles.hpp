#pragma once

#include <cstdint>
#include <vector>

#include "divisible/graph.hpp"
#include "divisible/limits.hpp"

namespace divisible {

/// A clique together with its size or total weight.
struct CliqueResult {
  std::int64_t value = 0;
  VertexSet witness;
};

/// Exact clique number by branch and bound with a greedy-colouring bound.
CliqueResult clique_number(const Graph& g, const Limits& limits = {});
/// omega(G[x]) without materialising the subgraph. The budget applies to |x|.
CliqueResult clique_number_within(const Graph& g, const VertexSet& x, const Limits& limits = {});

/// Maximum total weight of a clique; the empty clique has weight 0.
CliqueResult max_weight_clique(const Graph& g, const WeightFn& w, const Limits& limits = {});
CliqueResult max_weight_clique_within(const Graph& g, const WeightFn& w, const VertexSet& x,
                                      const Limits& limits = {});

struct ExactColoring {
  int colors = 0;
  /// Colour of each vertex, 0-based.
  std::vector<int> assignment;
};

/// Exact chromatic number with a witness colouring.
ExactColoring chromatic_number_exact(const Graph& g, const Limits& limits = {});

bool is_proper_coloring(const Graph& g, const std::vector<int>& assignment);

}  // namespace divisible
