#include "divisible/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace divisible {
namespace {

using Cells = std::vector<std::vector<int>>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g) {}

  CanonicalForm run() {
    Cells start(1);
    for (int v = 0; v < g_.order(); ++v) start[0].push_back(v);
    if (g_.order() > 0) {
      refine(start);
      search(start);
    }
    std::vector<std::uint64_t> rows = best_rows_;
    if (g_.order() == 0) rows.clear();
    return {Graph::from_adjacency(std::move(rows)), best_labeling_};
  }

 private:
  // Splits cells by neighbour counts into splitter cells until equitable.
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        std::uint64_t splitter = 0;
        for (int v : cells[s]) splitter |= bit(v);
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (cells[c].size() == 1) continue;
          std::map<int, std::vector<int>> by_count;
          for (int v : cells[c]) by_count[std::popcount(g_.row(v) & splitter)].push_back(v);
          if (by_count.size() == 1) continue;
          Cells pieces;
          for (auto& [count, members] : by_count) pieces.push_back(std::move(members));
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
          changed = true;
          break;
        }
      }
    }
  }

  void search(const Cells& cells) {
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& cell) { return cell.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const auto index = static_cast<std::size_t>(target - cells.begin());
    for (int v : *target) {
      Cells next;
      next.reserve(cells.size() + 1);
      next.insert(next.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(index));
      next.push_back({v});
      std::vector<int> rest;
      for (int u : *target)
        if (u != v) rest.push_back(u);
      next.push_back(std::move(rest));
      next.insert(next.end(), cells.begin() + static_cast<std::ptrdiff_t>(index) + 1, cells.end());
      refine(next);
      search(next);
    }
  }

  void leaf(const Cells& cells) {
    const int n = g_.order();
    std::vector<int> position(static_cast<std::size_t>(n));
    std::vector<int> labeling(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < cells.size(); ++i) {
      position[static_cast<std::size_t>(cells[i][0])] = static_cast<int>(i);
      labeling[i] = cells[i][0];
    }
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (std::uint64_t r = g_.row(labeling[static_cast<std::size_t>(i)]); r != 0; r &= r - 1)
        rows[static_cast<std::size_t>(i)] |= bit(position[static_cast<std::size_t>(std::countr_zero(r))]);
    if (best_labeling_.empty() || rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_labeling_ = std::move(labeling);
    }
  }

  const Graph& g_;
  std::vector<std::uint64_t> best_rows_;
  std::vector<int> best_labeling_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return Canonizer(g).run(); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a).graph == canonical_form(b).graph;
}

}  // namespace divisible
