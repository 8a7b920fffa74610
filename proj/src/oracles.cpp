#include "divisible/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace divisible {
namespace {

// Greedy sequential colouring of `cand` in vertex order. Fills order/colour
// arrays so that colour classes appear consecutively; returns the count.
int greedy_classes(const Graph& g, std::uint64_t cand, std::array<int, 64>& order, std::array<int, 64>& cls) {
  int k = 0;
  int colour = 0;
  std::uint64_t uncoloured = cand;
  while (uncoloured != 0) {
    ++colour;
    std::uint64_t q = uncoloured;
    while (q != 0) {
      int v = std::countr_zero(q);
      q &= ~bit(v) & ~g.row(v);
      uncoloured &= ~bit(v);
      order[static_cast<std::size_t>(k)] = v;
      cls[static_cast<std::size_t>(k)] = colour;
      ++k;
    }
  }
  return k;
}

class MaxCliqueSearch {
 public:
  MaxCliqueSearch(const Graph& g, const Limits& limits) : g_(g), ticker_(limits) {}

  void expand(std::uint64_t current, int size, std::uint64_t cand) {
    ticker_.tick();
    if (cand == 0) {
      if (size > best_) {
        best_ = size;
        best_set_ = current;
      }
      return;
    }
    std::array<int, 64> order{};
    std::array<int, 64> cls{};
    const int k = greedy_classes(g_, cand, order, cls);
    for (int i = k - 1; i >= 0; --i) {
      if (size + cls[static_cast<std::size_t>(i)] <= best_) return;
      const int v = order[static_cast<std::size_t>(i)];
      expand(current | bit(v), size + 1, cand & g_.row(v));
      cand &= ~bit(v);
    }
  }

  int best() const { return best_; }
  std::uint64_t best_set() const { return best_set_; }

 private:
  const Graph& g_;
  DeadlineTicker ticker_;
  int best_ = 0;
  std::uint64_t best_set_ = 0;
};

class MaxWeightCliqueSearch {
 public:
  MaxWeightCliqueSearch(const Graph& g, const WeightFn& w, const Limits& limits) : g_(g), w_(w), ticker_(limits) {}

  void expand(std::uint64_t current, std::int64_t weight, std::uint64_t cand) {
    ticker_.tick();
    if (weight > best_) {
      best_ = weight;
      best_set_ = current;
    }
    if (cand == 0) return;
    std::array<int, 64> order{};
    std::array<int, 64> cls{};
    const int k = greedy_classes(g_, cand, order, cls);
    // bound[i]: sum over colour classes up to order[i] of the heaviest member seen so far
    std::array<std::int64_t, 64> bound{};
    std::int64_t closed = 0;
    std::int64_t open_max = 0;
    for (int i = 0; i < k; ++i) {
      if (i > 0 && cls[static_cast<std::size_t>(i)] != cls[static_cast<std::size_t>(i - 1)]) {
        closed += open_max;
        open_max = 0;
      }
      open_max = std::max(open_max, w_[order[static_cast<std::size_t>(i)]]);
      bound[static_cast<std::size_t>(i)] = closed + open_max;
    }
    for (int i = k - 1; i >= 0; --i) {
      if (weight + bound[static_cast<std::size_t>(i)] <= best_) return;
      const int v = order[static_cast<std::size_t>(i)];
      expand(current | bit(v), weight + w_[v], cand & g_.row(v));
      cand &= ~bit(v);
    }
  }

  std::int64_t best() const { return best_; }
  std::uint64_t best_set() const { return best_set_; }

 private:
  const Graph& g_;
  const WeightFn& w_;
  DeadlineTicker ticker_;
  std::int64_t best_ = 0;
  std::uint64_t best_set_ = 0;
};

void check_subset(const Graph& g, const VertexSet& x) {
  if (x.host_size() != g.order()) throw InvalidArgument("vertex set does not belong to this graph");
}

// DSATUR backtracking k-colouring on n <= 64 vertices.
class KColoring {
 public:
  KColoring(const Graph& g, int k, const Limits& limits)
      : g_(g), k_(k), ticker_(limits), colour_(static_cast<std::size_t>(g.order()), -1) {}

  bool solve() { return assign(0); }
  const std::vector<int>& colours() const { return colour_; }

 private:
  int pick() const {
    int best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (int v = 0; v < g_.order(); ++v) {
      if (colour_[static_cast<std::size_t>(v)] >= 0) continue;
      int sat = 0;
      for (int c = 0; c < used_; ++c)
        if (g_.row(v) & classes_[static_cast<std::size_t>(c)]) ++sat;
      int deg = std::popcount(g_.row(v) & ~coloured_);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool assign(int done) {
    ticker_.tick();
    if (done == g_.order()) return true;
    const int v = pick();
    const int limit = std::min(k_, used_ + 1);
    for (int c = 0; c < limit; ++c) {
      if (g_.row(v) & classes_[static_cast<std::size_t>(c)]) continue;
      const bool fresh = c == used_;
      colour_[static_cast<std::size_t>(v)] = c;
      classes_[static_cast<std::size_t>(c)] |= bit(v);
      coloured_ |= bit(v);
      if (fresh) ++used_;
      if (assign(done + 1)) return true;
      if (fresh) --used_;
      coloured_ &= ~bit(v);
      classes_[static_cast<std::size_t>(c)] &= ~bit(v);
      colour_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  DeadlineTicker ticker_;
  std::vector<int> colour_;
  std::array<std::uint64_t, 64> classes_{};
  std::uint64_t coloured_ = 0;
  int used_ = 0;
};

}  // namespace

CliqueResult clique_number_within(const Graph& g, const VertexSet& x, const Limits& limits) {
  check_subset(g, x);
  limits.require(x.size(), limits.clique_max_n, "clique number");
  MaxCliqueSearch search(g, limits);
  search.expand(0, 0, x.bits());
  return {search.best(), VertexSet::from_bits(g.order(), search.best_set())};
}

CliqueResult clique_number(const Graph& g, const Limits& limits) {
  return clique_number_within(g, g.vertices(), limits);
}

CliqueResult max_weight_clique_within(const Graph& g, const WeightFn& w, const VertexSet& x, const Limits& limits) {
  check_subset(g, x);
  if (w.size() != g.order()) throw InvalidArgument("weight function length differs from graph order");
  limits.require(x.size(), limits.clique_max_n, "max weight clique");
  MaxWeightCliqueSearch search(g, w, limits);
  search.expand(0, 0, x.bits());
  return {search.best(), VertexSet::from_bits(g.order(), search.best_set())};
}

CliqueResult max_weight_clique(const Graph& g, const WeightFn& w, const Limits& limits) {
  return max_weight_clique_within(g, w, g.vertices(), limits);
}

ExactColoring chromatic_number_exact(const Graph& g, const Limits& limits) {
  limits.require(g.order(), limits.chromatic_max_n, "chromatic number");
  if (g.order() == 0) return {};
  const int lower = static_cast<int>(clique_number(g, limits).value);
  for (int k = lower; k <= g.order(); ++k) {
    KColoring attempt(g, k, limits);
    if (attempt.solve()) return {k, attempt.colours()};
  }
  throw Error(ErrorKind::TheoremViolation, "chromatic search found no colouring with n colours");
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != g.order()) return false;
  for (auto [u, v] : g.edges())
    if (assignment[static_cast<std::size_t>(u)] == assignment[static_cast<std::size_t>(v)]) return false;
  for (int c : assignment)
    if (c < 0) return false;
  return true;
}

}  // namespace divisible
