#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "divisible/errors.hpp"
#include "divisible/vertex_set.hpp"

namespace divisible {

/// Finite simple undirected graph on vertices 0..order()-1.
///
/// Adjacency is stored as one bit row per vertex, so every neighbourhood is a
/// VertexSet and set algebra on vertex subsets is word arithmetic. Graphs are
/// immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws InvalidArgument on self-loops or endpoints outside 0..n-1. Repeated edges collapse.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  /// Throws InvalidArgument unless rows describe a symmetric irreflexive relation.
  static Graph from_adjacency(std::vector<std::uint64_t> rows);

  int order() const { return n_; }
  int edge_count() const;
  bool adjacent(int u, int v) const;
  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet neighbors(int v) const;
  std::uint64_t row(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  const std::vector<std::uint64_t>& rows() const { return adj_; }
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// Non-negative integer vertex weights, one entry per host vertex.
class WeightFn {
 public:
  WeightFn() = default;
  explicit WeightFn(std::vector<std::int64_t> weights);
  static WeightFn unit(int n) { return WeightFn(std::vector<std::int64_t>(static_cast<std::size_t>(n), 1)); }

  int size() const { return static_cast<int>(w_.size()); }
  std::int64_t operator[](int v) const { return w_[static_cast<std::size_t>(v)]; }
  std::int64_t total(const VertexSet& s) const;
  /// Vertices of strictly positive weight.
  VertexSet support() const;
  const std::vector<std::int64_t>& values() const { return w_; }
  bool operator==(const WeightFn&) const = default;

 private:
  std::vector<std::int64_t> w_;
};

/// G[X] together with the map from its vertices back to the host.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_host;

  /// Host vertex set corresponding to a set of local vertices.
  VertexSet lift(const VertexSet& local, int host_size) const;
  /// Local index of a host vertex, or -1.
  int local_index(int host_vertex) const;
};

Graph complement(const Graph& g);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
WeightFn restrict_weights(const WeightFn& w, const InducedSubgraph& sub);

/// N(v).
VertexSet neighbors(const Graph& g, int v);
/// M(v) = V(G) minus N[v].
VertexSet non_neighborhood(const Graph& g, int v);
VertexSet closed_neighborhood(const Graph& g, int v);

/// Components of G[x] ordered by smallest member. Empty x gives an empty list.
std::vector<VertexSet> components(const Graph& g, const VertexSet& x);
/// Components of the complement restricted to x.
std::vector<VertexSet> anticomponents(const Graph& g, const VertexSet& x);
bool is_connected_set(const Graph& g, const VertexSet& x);

/// Both require disjoint sets; overlapping sets throw InvalidArgument.
bool is_complete_to(const Graph& g, const VertexSet& x, const VertexSet& y);
bool is_anticomplete_to(const Graph& g, const VertexSet& x, const VertexSet& y);

/// Rejection reasons for seagull().
enum class SeagullFailure { VertexInSet, NotConnected, VertexComplete, VertexAnticomplete };

class SeagullError : public Error {
 public:
  SeagullError(SeagullFailure reason, const std::string& what) : Error(ErrorKind::Seagull, what), reason_(reason) {}
  SeagullFailure reason() const { return reason_; }

 private:
  SeagullFailure reason_;
};

struct Seagull {
  int a;
  int b;
};

/// For a connected c and a vertex v mixed on c, returns a, b in c with v-a-b an
/// induced path. With in_complement set, all adjacency is read in the complement.
/// Picks the smallest a, then the smallest b.
Seagull seagull(const Graph& g, const VertexSet& c, int v, bool in_complement = false);

}  // namespace divisible
