#include "divisible/recognition.hpp"

#include <algorithm>
#include <bit>

#include "divisible/named_graphs.hpp"

namespace divisible {
namespace {

std::uint64_t closed_row(const Graph& g, int v) { return g.row(v) | bit(v); }

class InducedMatcher {
 public:
  InducedMatcher(const Graph& g, const Graph& pattern, const std::function<bool(const std::vector<int>&)>& visit)
      : g_(g), p_(pattern), visit_(visit), image_(static_cast<std::size_t>(pattern.order())) {}

  void run() {
    if (p_.order() > g_.order()) return;
    extend(0, 0);
  }

 private:
  bool extend(int i, std::uint64_t used) {
    if (i == p_.order()) return visit_(image_);
    std::uint64_t cand = low_bits(g_.order()) & ~used;
    for (int j = 0; j < i; ++j) {
      const int hj = image_[static_cast<std::size_t>(j)];
      cand &= (p_.row(i) & bit(j)) ? g_.row(hj) : ~closed_row(g_, hj);
    }
    for (; cand != 0; cand &= cand - 1) {
      const int v = std::countr_zero(cand);
      image_[static_cast<std::size_t>(i)] = v;
      if (!extend(i + 1, used | bit(v))) return false;
    }
    return true;
  }

  const Graph& g_;
  const Graph& p_;
  const std::function<bool(const std::vector<int>&)>& visit_;
  std::vector<int> image_;
};

std::optional<Embedding> find_named(const Graph& g, const Graph& pattern, Pattern kind) {
  auto found = find_induced(g, pattern);
  if (!found) return std::nullopt;
  found->pattern = kind;
  found->custom = Graph();
  return found;
}

// Induced cycles of an exact length with the smallest vertex as start and
// the second vertex smaller than the last, so each cycle is seen once.
class HoleSearch {
 public:
  HoleSearch(const Graph& g, int length, const Limits& limits) : g_(g), length_(length), ticker_(limits) {}

  std::optional<std::vector<int>> run() {
    for (int s = 0; s < g_.order(); ++s) {
      path_.assign(1, s);
      above_ = low_bits(g_.order()) & ~low_bits(s + 1);
      if (extend(bit(s), bit(s))) return path_;
    }
    return std::nullopt;
  }

 private:
  // blocked: N[p1..p_{m-1}] plus p_m. inner: N[p2..p_{m-1}] plus p1 and p_m.
  bool extend(std::uint64_t blocked, std::uint64_t inner) {
    ticker_.tick();
    const int m = static_cast<int>(path_.size());
    const int last = path_.back();
    const int start = path_.front();
    if (m + 1 == length_) {
      std::uint64_t close = g_.row(last) & g_.row(start) & ~inner & above_;
      if (m >= 2) close &= ~low_bits(path_[1] + 1);
      if (close == 0) return false;
      path_.push_back(std::countr_zero(close));
      return true;
    }
    std::uint64_t next = g_.row(last) & ~blocked & above_;
    const std::uint64_t next_blocked = blocked | closed_row(g_, last);
    const std::uint64_t next_inner = m >= 2 ? inner | closed_row(g_, last) : inner;
    for (; next != 0; next &= next - 1) {
      const int u = std::countr_zero(next);
      path_.push_back(u);
      if (extend(next_blocked | bit(u), next_inner | bit(u))) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int length_;
  DeadlineTicker ticker_;
  std::vector<int> path_;
  std::uint64_t above_ = 0;
};

std::optional<std::vector<int>> shortest_odd_hole(const Graph& g, const Limits& limits) {
  for (int k = 5; k <= g.order(); k += 2) {
    HoleSearch search(g, k, limits);
    if (auto found = search.run()) return found;
  }
  return std::nullopt;
}

}  // namespace

std::string Embedding::name() const {
  switch (pattern) {
    case Pattern::P5:
      return "P5";
    case Pattern::C5:
      return "C5";
    case Pattern::Bull:
      return "bull";
    case Pattern::OddHole:
      return "odd-hole(" + std::to_string(vertices.size()) + ")";
    case Pattern::OddAntihole:
      return "odd-antihole(" + std::to_string(vertices.size()) + ")";
    case Pattern::Custom:
      break;
  }
  return "custom(" + std::to_string(vertices.size()) + ")";
}

Graph p5_pattern() { return named::path(5); }
Graph c5_pattern() { return named::cycle(5); }
Graph bull_pattern() { return named::bull(); }

Graph pattern_of(const Embedding& e) {
  const int k = static_cast<int>(e.vertices.size());
  switch (e.pattern) {
    case Pattern::P5:
      return p5_pattern();
    case Pattern::C5:
      return c5_pattern();
    case Pattern::Bull:
      return bull_pattern();
    case Pattern::OddHole:
      return named::cycle(k);
    case Pattern::OddAntihole:
      return complement(named::cycle(k));
    case Pattern::Custom:
      break;
  }
  return e.custom;
}

bool is_valid_embedding(const Graph& g, const Embedding& e) {
  if ((e.pattern == Pattern::OddHole || e.pattern == Pattern::OddAntihole) &&
      (e.vertices.size() < 5 || e.vertices.size() % 2 == 0))
    return false;
  const Graph p = pattern_of(e);
  if (p.order() != static_cast<int>(e.vertices.size())) return false;
  std::uint64_t seen = 0;
  for (int v : e.vertices) {
    if (v < 0 || v >= g.order() || (seen & bit(v))) return false;
    seen |= bit(v);
  }
  for (int i = 0; i < p.order(); ++i)
    for (int j = i + 1; j < p.order(); ++j)
      if (p.adjacent(i, j) != g.adjacent(e.vertices[static_cast<std::size_t>(i)], e.vertices[static_cast<std::size_t>(j)]))
        return false;
  return true;
}

void for_each_induced(const Graph& g, const Graph& pattern, const std::function<bool(const std::vector<int>&)>& visit) {
  InducedMatcher(g, pattern, visit).run();
}

std::optional<Embedding> find_induced(const Graph& g, const Graph& pattern) {
  std::optional<Embedding> found;
  for_each_induced(g, pattern, [&](const std::vector<int>& image) {
    found = Embedding{Pattern::Custom, image, pattern};
    return false;
  });
  return found;
}

std::optional<Embedding> find_p5(const Graph& g) { return find_named(g, p5_pattern(), Pattern::P5); }
std::optional<Embedding> find_c5(const Graph& g) { return find_named(g, c5_pattern(), Pattern::C5); }
std::optional<Embedding> find_bull(const Graph& g) { return find_named(g, bull_pattern(), Pattern::Bull); }

std::optional<Embedding> find_odd_hole(const Graph& g, const Limits& limits) {
  limits.require(g.order(), limits.recognition_max_n, "odd hole search");
  auto cycle = shortest_odd_hole(g, limits);
  if (!cycle) return std::nullopt;
  return Embedding{Pattern::OddHole, *cycle, {}};
}

std::optional<Embedding> find_odd_antihole(const Graph& g, const Limits& limits) {
  limits.require(g.order(), limits.recognition_max_n, "odd antihole search");
  auto cycle = shortest_odd_hole(complement(g), limits);
  if (!cycle) return std::nullopt;
  return Embedding{Pattern::OddAntihole, *cycle, {}};
}

PerfectionResult is_perfect(const Graph& g, const Limits& limits) {
  if (auto hole = find_odd_hole(g, limits)) return {false, hole};
  if (auto antihole = find_odd_antihole(g, limits)) return {false, antihole};
  return {true, std::nullopt};
}

PerfectionResult is_perfect_within(const Graph& g, const VertexSet& x, const Limits& limits) {
  auto sub = induced_subgraph(g, x);
  auto result = is_perfect(sub.graph, limits);
  if (result.witness)
    for (int& v : result.witness->vertices) v = sub.to_host[static_cast<std::size_t>(v)];
  return result;
}

bool is_homogeneous_set(const Graph& g, const VertexSet& x) {
  if (x.host_size() != g.order()) throw InvalidArgument("vertex set does not belong to this graph");
  if (x.size() <= 1 || x.size() >= g.order()) return false;
  for (int v : x.complement()) {
    const std::uint64_t seen = g.row(v) & x.bits();
    if (seen != 0 && seen != x.bits()) return false;
  }
  return true;
}

std::optional<VertexSet> find_homogeneous_set(const Graph& g) {
  const int n = g.order();
  const std::uint64_t all = low_bits(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::uint64_t x = bit(u) | bit(v);
      bool grew = true;
      while (grew && x != all) {
        grew = false;
        for (std::uint64_t out = all & ~x; out != 0; out &= out - 1) {
          const int w = std::countr_zero(out);
          const std::uint64_t seen = g.row(w) & x;
          if (seen != 0 && seen != x) {
            x |= bit(w);
            grew = true;
          }
        }
      }
      if (x != all) {
        auto found = VertexSet::from_bits(n, x);
        if (!is_homogeneous_set(g, found)) throw Error(ErrorKind::TheoremViolation, "module closure is not homogeneous");
        return found;
      }
    }
  return std::nullopt;
}

ClassReport classify(const Graph& g, const Limits& limits) {
  ClassReport r;
  r.p5_witness = find_p5(g);
  r.c5_witness = find_c5(g);
  r.bull_witness = find_bull(g);
  r.odd_hole_witness = find_odd_hole(g, limits);
  if (r.odd_hole_witness) {
    r.imperfection_witness = r.odd_hole_witness;
  } else {
    r.imperfection_witness = find_odd_antihole(g, limits);
  }
  r.p5_free = !r.p5_witness;
  r.c5_free = !r.c5_witness;
  r.bull_free = !r.bull_witness;
  r.odd_hole_free = !r.odd_hole_witness;
  r.perfect = !r.imperfection_witness;
  return r;
}

}  // namespace divisible
