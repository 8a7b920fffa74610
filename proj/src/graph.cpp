#include "divisible/graph.hpp"

#include <bit>
#include <sstream>
#include <string>

namespace divisible {

std::string VertexSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first_member = true;
  for (int v : *this) {
    if (!first_member) out << ',';
    out << v;
    first_member = false;
  }
  out << '}';
  return out.str();
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw InvalidArgument("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)] |= bit(v);
    g.adj_[static_cast<std::size_t>(v)] |= bit(u);
  }
  return g;
}

Graph Graph::from_adjacency(std::vector<std::uint64_t> rows) {
  Graph g(static_cast<int>(rows.size()));
  const std::uint64_t mask = low_bits(g.n_);
  for (int u = 0; u < g.n_; ++u) {
    std::uint64_t r = rows[static_cast<std::size_t>(u)];
    if ((r & ~mask) != 0) throw InvalidArgument("adjacency row references a missing vertex");
    if ((r & bit(u)) != 0) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    for (std::uint64_t rest = r; rest != 0; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if ((rows[static_cast<std::size_t>(v)] & bit(u)) == 0) throw InvalidArgument("adjacency is not symmetric");
    }
  }
  g.adj_ = std::move(rows);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for graph of order " + std::to_string(n_));
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto r : adj_) twice += std::popcount(r);
  return twice / 2;
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  return VertexSet::from_bits(n_, adj_[static_cast<std::size_t>(v)]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (std::uint64_t rest = adj_[static_cast<std::size_t>(u)] & ~low_bits(u + 1); rest != 0; rest &= rest - 1)
      out.emplace_back(u, std::countr_zero(rest));
  return out;
}

WeightFn::WeightFn(std::vector<std::int64_t> weights) : w_(std::move(weights)) {
  for (auto x : w_)
    if (x < 0) throw InvalidArgument("weights must be non-negative");
}

std::int64_t WeightFn::total(const VertexSet& s) const {
  std::int64_t sum = 0;
  for (int v : s) sum += w_[static_cast<std::size_t>(v)];
  return sum;
}

VertexSet WeightFn::support() const {
  VertexSet s(size());
  for (int v = 0; v < size(); ++v)
    if (w_[static_cast<std::size_t>(v)] > 0) s.insert(v);
  return s;
}

VertexSet InducedSubgraph::lift(const VertexSet& local, int host_size) const {
  VertexSet out(host_size);
  for (int v : local) out.insert(to_host[static_cast<std::size_t>(v)]);
  return out;
}

int InducedSubgraph::local_index(int host_vertex) const {
  for (std::size_t i = 0; i < to_host.size(); ++i)
    if (to_host[i] == host_vertex) return static_cast<int>(i);
  return -1;
}

Graph complement(const Graph& g) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.order()));
  const std::uint64_t mask = low_bits(g.order());
  for (int v = 0; v < g.order(); ++v) rows[static_cast<std::size_t>(v)] = ~g.row(v) & mask & ~bit(v);
  return Graph::from_adjacency(std::move(rows));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.host_size() != g.order()) throw InvalidArgument("vertex set does not belong to this graph");
  InducedSubgraph sub;
  sub.to_host = s.members();
  const int k = static_cast<int>(sub.to_host.size());
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.row(sub.to_host[static_cast<std::size_t>(i)]) & bit(sub.to_host[static_cast<std::size_t>(j)])) {
        rows[static_cast<std::size_t>(i)] |= bit(j);
        rows[static_cast<std::size_t>(j)] |= bit(i);
      }
  sub.graph = Graph::from_adjacency(std::move(rows));
  return sub;
}

WeightFn restrict_weights(const WeightFn& w, const InducedSubgraph& sub) {
  std::vector<std::int64_t> out;
  out.reserve(sub.to_host.size());
  for (int v : sub.to_host) out.push_back(w[v]);
  return WeightFn(std::move(out));
}

VertexSet neighbors(const Graph& g, int v) { return g.neighbors(v); }

VertexSet closed_neighborhood(const Graph& g, int v) { return g.neighbors(v).with(v); }

VertexSet non_neighborhood(const Graph& g, int v) { return closed_neighborhood(g, v).complement(); }

namespace {

void check_host(const Graph& g, const VertexSet& x) {
  if (x.host_size() != g.order()) throw InvalidArgument("vertex set does not belong to this graph");
}

std::vector<VertexSet> components_by_rows(const Graph& g, const VertexSet& x, bool complemented) {
  check_host(g, x);
  std::vector<VertexSet> out;
  std::uint64_t rest = x.bits();
  while (rest != 0) {
    std::uint64_t comp = rest & -rest;
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint64_t nbrs = complemented ? (~g.row(v) & ~bit(v)) : g.row(v);
      std::uint64_t fresh = nbrs & rest & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    rest &= ~comp;
    out.push_back(VertexSet::from_bits(g.order(), comp));
  }
  return out;
}

}  // namespace

std::vector<VertexSet> components(const Graph& g, const VertexSet& x) { return components_by_rows(g, x, false); }

std::vector<VertexSet> anticomponents(const Graph& g, const VertexSet& x) { return components_by_rows(g, x, true); }

bool is_connected_set(const Graph& g, const VertexSet& x) { return components(g, x).size() <= 1; }

bool is_complete_to(const Graph& g, const VertexSet& x, const VertexSet& y) {
  check_host(g, x);
  if (x.intersects(y)) throw InvalidArgument("is_complete_to requires disjoint sets");
  for (int v : x)
    if ((g.row(v) & y.bits()) != y.bits()) return false;
  return true;
}

bool is_anticomplete_to(const Graph& g, const VertexSet& x, const VertexSet& y) {
  check_host(g, x);
  if (x.intersects(y)) throw InvalidArgument("is_anticomplete_to requires disjoint sets");
  for (int v : x)
    if ((g.row(v) & y.bits()) != 0) return false;
  return true;
}

Seagull seagull(const Graph& g, const VertexSet& c, int v, bool in_complement) {
  check_host(g, c);
  if (c.contains(v)) throw SeagullError(SeagullFailure::VertexInSet, "seagull: v lies in C");
  auto row = [&](int u) { return in_complement ? (~g.row(u) & low_bits(g.order()) & ~bit(u)) : g.row(u); };
  if (in_complement ? anticomponents(g, c).size() > 1 : components(g, c).size() > 1)
    throw SeagullError(SeagullFailure::NotConnected, "seagull: C is not connected");
  const std::uint64_t nv = row(v) & c.bits();
  const std::uint64_t mv = c.bits() & ~nv;
  if (mv == 0) throw SeagullError(SeagullFailure::VertexComplete, "seagull: v is complete to C");
  if (nv == 0) throw SeagullError(SeagullFailure::VertexAnticomplete, "seagull: v is anticomplete to C");
  for (std::uint64_t rest = nv; rest != 0; rest &= rest - 1) {
    int a = std::countr_zero(rest);
    std::uint64_t bs = row(a) & mv;
    if (bs != 0) return {a, std::countr_zero(bs)};
  }
  throw SeagullError(SeagullFailure::NotConnected, "seagull: C is not connected");
}

}  // namespace divisible
