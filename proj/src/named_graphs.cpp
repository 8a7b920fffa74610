#include "divisible/named_graphs.hpp"

namespace divisible::named {

Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete(int n) { return complement(edgeless(n)); }

Graph edgeless(int n) { return Graph(n); }

Graph bull() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}}); }

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph::from_edges(10, edges);
}

}  // namespace divisible::named
