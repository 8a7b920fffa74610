#pragma once

// Deliberately slow reference implementations. They only use Graph::adjacent
// and Graph::order, so they share no search code with the library.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "divisible/graph.hpp"

namespace naive {

using divisible::Graph;
using Mask = std::uint32_t;

inline bool is_clique(const Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

inline std::vector<int> unpack(Mask m) {
  std::vector<int> out;
  for (int v = 0; m != 0; ++v, m >>= 1)
    if (m & 1) out.push_back(v);
  return out;
}

inline bool mask_is_clique(const Graph& g, Mask m) { return is_clique(g, unpack(m)); }

inline bool mask_is_stable(const Graph& g, Mask m) {
  const auto vs = unpack(m);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

/// omega of g restricted to the vertices in `within`.
inline int clique_number(const Graph& g, Mask within) {
  int best = 0;
  for (Mask s = within;; s = (s - 1) & within) {
    const int size = __builtin_popcount(s);
    if (size > best && mask_is_clique(g, s)) best = size;
    if (s == 0) break;
  }
  return best;
}

inline int clique_number(const Graph& g) { return clique_number(g, (Mask{1} << g.order()) - 1); }

inline std::int64_t max_weight_clique(const Graph& g, const std::vector<std::int64_t>& w, Mask within) {
  std::int64_t best = 0;
  for (Mask s = within;; s = (s - 1) & within) {
    if (mask_is_clique(g, s)) {
      std::int64_t total = 0;
      for (int v : unpack(s)) total += w[static_cast<std::size_t>(v)];
      best = std::max(best, total);
    }
    if (s == 0) break;
  }
  return best;
}

inline std::int64_t max_weight_clique(const Graph& g, const std::vector<std::int64_t>& w) {
  return max_weight_clique(g, w, (Mask{1} << g.order()) - 1);
}

/// chi(G[S]) for every S, by peeling off a stable set containing the lowest vertex.
inline std::vector<int> chromatic_table(const Graph& g) {
  const int n = g.order();
  const Mask full = (Mask{1} << n) - 1;
  std::vector<char> stable(std::size_t{1} << n);
  for (Mask s = 0; s <= full; ++s) stable[s] = mask_is_stable(g, s);
  std::vector<int> chi(std::size_t{1} << n, 0);
  for (Mask s = 1; s <= full; ++s) {
    const Mask low = s & (~s + 1);
    const Mask rest = s & ~low;
    int best = n + 1;
    for (Mask t = rest;; t = (t - 1) & rest) {
      if (stable[t | low]) best = std::min(best, 1 + chi[s & ~(t | low)]);
      if (t == 0) break;
    }
    chi[s] = best;
  }
  return chi;
}

inline int chromatic_number(const Graph& g) { return chromatic_table(g)[(Mask{1} << g.order()) - 1]; }

/// Every induced subgraph H has chi(H) = omega(H).
inline bool perfect_by_definition(const Graph& g) {
  const auto chi = chromatic_table(g);
  const Mask full = (Mask{1} << g.order()) - 1;
  for (Mask s = 0; s <= full; ++s)
    if (chi[s] != clique_number(g, s)) return false;
  return true;
}

/// vs[i] -> pattern vertex i is an induced copy of pattern.
inline bool induces(const Graph& g, const std::vector<int>& vs, const Graph& pattern) {
  for (int i = 0; i < pattern.order(); ++i)
    for (int j = i + 1; j < pattern.order(); ++j)
      if (g.adjacent(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)]) != pattern.adjacent(i, j))
        return false;
  return true;
}

/// Lexicographically first image vector of an induced copy, by trying every
/// ordered k-tuple in lexicographic order.
inline std::optional<std::vector<int>> first_induced(const Graph& g, const Graph& pattern) {
  const int k = pattern.order();
  const int n = g.order();
  if (k > n) return std::nullopt;
  std::vector<int> tuple(static_cast<std::size_t>(k), 0);
  while (true) {
    std::vector<int> sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() && induces(g, tuple, pattern)) return tuple;
    int pos = k - 1;
    while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == n - 1) tuple[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) return std::nullopt;
    ++tuple[static_cast<std::size_t>(pos)];
  }
}

/// Some k-subset induces the pattern under some ordering.
inline bool contains_induced(const Graph& g, const Graph& pattern) {
  const int k = pattern.order();
  const int n = g.order();
  if (k > n) return false;
  const Mask full = (Mask{1} << n) - 1;
  for (Mask s = 0; s <= full; ++s) {
    if (__builtin_popcount(s) != k) continue;
    auto vs = unpack(s);
    do {
      if (induces(g, vs, pattern)) return true;
    } while (std::next_permutation(vs.begin(), vs.end()));
  }
  return false;
}

/// G[S] is a cycle: every vertex has two neighbours in S and S is connected.
inline bool induces_cycle(const Graph& g, Mask s) {
  const auto vs = unpack(s);
  if (vs.size() < 3) return false;
  for (int v : vs) {
    int deg = 0;
    for (int u : vs) deg += g.adjacent(u, v) ? 1 : 0;
    if (deg != 2) return false;
  }
  Mask seen = Mask{1} << vs[0];
  std::vector<int> stack{vs[0]};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : vs)
      if (g.adjacent(u, v) && !(seen & (Mask{1} << u))) {
        seen |= Mask{1} << u;
        stack.push_back(u);
      }
  }
  return seen == s;
}

inline Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j)) edges.emplace_back(i, j);
  return Graph::from_edges(g.order(), edges);
}

/// Length of the shortest odd hole, or 0.
inline int shortest_odd_hole(const Graph& g) {
  const Mask full = (Mask{1} << g.order()) - 1;
  int best = 0;
  for (Mask s = 0; s <= full; ++s) {
    const int size = __builtin_popcount(s);
    if (size >= 5 && size % 2 == 1 && (best == 0 || size < best) && induces_cycle(g, s)) best = size;
  }
  return best;
}

inline bool has_odd_hole(const Graph& g) { return shortest_odd_hole(g) != 0; }
inline bool has_odd_antihole(const Graph& g) { return has_odd_hole(naive::complement(g)); }

inline bool is_homogeneous(const Graph& g, Mask x) {
  const int size = __builtin_popcount(x);
  if (size <= 1 || size >= g.order()) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (x & (Mask{1} << v)) continue;
    int hits = 0;
    for (int u : unpack(x)) hits += g.adjacent(u, v) ? 1 : 0;
    if (hits != 0 && hits != size) return false;
  }
  return true;
}

inline bool has_homogeneous_set(const Graph& g) {
  const Mask full = (Mask{1} << g.order()) - 1;
  for (Mask x = 0; x <= full; ++x)
    if (is_homogeneous(g, x)) return true;
  return false;
}

inline std::vector<Mask> components(const Graph& g, Mask x) {
  std::vector<Mask> out;
  Mask left = x;
  while (left != 0) {
    const int start = __builtin_ctz(left);
    Mask comp = Mask{1} << start;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int v : unpack(left & ~comp))
        for (int u : unpack(comp))
          if (g.adjacent(u, v)) {
            comp |= Mask{1} << v;
            grew = true;
            break;
          }
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

/// The same graph under the vertex map v -> perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return Graph::from_edges(g.order(), edges);
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Replaces vertex v by a pair of twins (adjacent when `true_twins`); the copy is vertex n.
inline Graph substitute_twin(const Graph& g, int v, bool true_twins) {
  const int n = g.order();
  std::vector<std::pair<int, int>> edges = g.edges();
  for (int u = 0; u < n; ++u)
    if (g.adjacent(u, v)) edges.emplace_back(u, n);
  if (true_twins) edges.emplace_back(v, n);
  return Graph::from_edges(n + 1, edges);
}

/// Every graph on n labelled vertices (n <= 6), one per edge subset.
template <class Visit>
void for_each_labelled_graph(int n, Visit&& visit) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (m >> b & 1) edges.push_back(slots[b]);
    visit(Graph::from_edges(n, edges));
  }
}

}  // namespace naive
