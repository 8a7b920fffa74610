#include "divisible/divisibility.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "divisible/oracles.hpp"

namespace divisible {
namespace {

// Maps local vertex ids of a (possibly nested) subgraph to ids of the
// top-level input so that trace entries stay comparable across recursion.
struct TraceContext {
  Trace* trace;
  std::vector<int> labels;
  int depth = 0;

  std::vector<int> ids(const VertexSet& s) const {
    std::vector<int> out;
    for (int v : s) out.push_back(labels[static_cast<std::size_t>(v)]);
    return out;
  }
  int id(int v) const { return labels[static_cast<std::size_t>(v)]; }
  TraceStep& add(std::string kind, std::string note = {}) {
    trace->push_back(TraceStep{std::move(kind), depth, std::move(note), {}, {}});
    return trace->back();
  }
  TraceContext child(const InducedSubgraph& sub) const {
    TraceContext c{trace, {}, depth + 1};
    for (int v : sub.to_host) c.labels.push_back(id(v));
    return c;
  }
};

std::vector<int> identity_labels(int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

// Division of one connected vertex set `h` (|h| >= 2) of g.
VertexSet divide_component(const Graph& g, const VertexSet& h, TraceContext& ctx) {
  const int n = g.order();
  const int v = h.first();
  const VertexSet nv = g.neighbors(v) & h;
  const VertexSet mv = h - nv.with(v);
  const auto parts = components(g, mv);

  auto& choice = ctx.add("vertex-choice", "root vertex v and the components of M(v)");
  choice.values.emplace_back("v", ctx.id(v));
  choice.sets.emplace_back("N", ctx.ids(nv));
  choice.sets.emplace_back("M", ctx.ids(mv));
  for (std::size_t i = 0; i < parts.size(); ++i) choice.sets.emplace_back("C" + std::to_string(i + 1), ctx.ids(parts[i]));

  int lonely = -1;
  for (std::size_t i = 0; i < parts.size() && lonely < 0; ++i) {
    bool dominated = false;
    for (int u : nv)
      if (is_complete_to(g, VertexSet(n, {u}), parts[i])) {
        dominated = true;
        break;
      }
    if (!dominated) lonely = static_cast<int>(i);
  }

  if (lonely < 0) {
    const VertexSet a = mv.with(v);
    auto& base = ctx.add("base-partition", "every component of M(v) has a complete vertex in N(v): (M(v)+v, N(v))");
    base.sets.emplace_back("A", ctx.ids(a));
    base.sets.emplace_back("B", ctx.ids(nv));
    return a;
  }

  const VertexSet& c1 = parts[static_cast<std::size_t>(lonely)];
  VertexSet candidates(n);
  int chosen = -1;
  int best = -1;
  for (int u : nv) {
    if (!g.neighbors(u).intersects(c1)) continue;
    candidates.insert(u);
    const int reach = (g.neighbors(u) & mv).size();
    if (reach > best) {
      best = reach;
      chosen = u;
    }
  }
  if (chosen < 0) throw TheoremViolation("no vertex of N(v) reaches C_1; component is disconnected", *ctx.trace);

  const VertexSet a = g.neighbors(chosen) & h;
  auto& base = ctx.add("base-partition", "C_1 has no complete vertex in N(v): (N(n), rest)");
  base.values.emplace_back("C1_index", lonely + 1);
  base.values.emplace_back("n", ctx.id(chosen));
  base.values.emplace_back("n_neighbours_in_M", best);
  base.sets.emplace_back("candidates", ctx.ids(candidates));
  base.sets.emplace_back("A", ctx.ids(a));
  base.sets.emplace_back("B", ctx.ids(h - a));
  return a;
}

TwoDivision two_divide_unchecked(const Graph& g, TraceContext ctx, const Limits& limits) {
  const int n = g.order();
  const auto omega = clique_number(g, limits).value;
  if (omega <= 1) throw DegenerateClique("two-division needs a graph with at least one edge");

  const auto parts = components(g, g.vertices());
  auto& split = ctx.add("component-split");
  for (std::size_t i = 0; i < parts.size(); ++i) split.sets.emplace_back("H" + std::to_string(i + 1), ctx.ids(parts[i]));

  VertexSet a(n);
  for (const auto& h : parts) {
    if (h.size() == 1) {
      a |= h;
      continue;
    }
    a |= divide_component(g, h, ctx);
  }
  const VertexSet b = g.vertices() - a;
  if (auto verdict = verify_two_division(g, a, b, limits); !verdict)
    throw TheoremViolation("two-division failed verification: " + verdict.violated, *ctx.trace);
  return {a, b, {}};
}

PerfectDivision divide_weighted(const Graph& g, const WeightFn& w, TraceContext ctx, const Limits& limits);

PerfectDivision divide_prime(const Graph& g, TraceContext& ctx, const Limits& limits) {
  const auto v = find_perfect_nonneighborhood_vertex(g, limits);
  if (!v) throw TheoremViolation("prime graph has no vertex whose non-neighbourhood is perfect", *ctx.trace);
  const VertexSet p = non_neighborhood(g, *v).with(*v);
  const VertexSet w_side = g.neighbors(*v);
  auto& step = ctx.add("vertex-choice", "prime: P = M(v)+v, W = N(v)");
  step.values.emplace_back("v", ctx.id(*v));
  step.sets.emplace_back("P", ctx.ids(p));
  step.sets.emplace_back("W", ctx.ids(w_side));
  return {p, w_side, std::nullopt, {}};
}

PerfectDivision divide_weighted(const Graph& g, const WeightFn& w, TraceContext ctx, const Limits& limits) {
  const int n = g.order();
  const VertexSet support = w.support();
  if (support.empty()) {
    ctx.add("base-partition", "no vertex of positive weight: P empty");
    return {VertexSet(n), g.vertices(), w, {}};
  }

  const auto positive = induced_subgraph(g, support);
  const WeightFn wu = restrict_weights(w, positive);
  TraceContext inner_ctx = ctx;
  if (support.size() != n) {
    auto& step = ctx.add("restrict", "drop zero-weight vertices into W");
    step.sets.emplace_back("U", ctx.ids(support));
    inner_ctx = ctx.child(positive);
    inner_ctx.depth = ctx.depth;
  }

  const Graph& h = positive.graph;
  PerfectDivision local;
  if (auto x = find_homogeneous_set(h)) {
    auto step = quotient_by_homogeneous_set(h, wu, *x, limits);
    auto& q = inner_ctx.add("quotient", "contract homogeneous set X to its smallest member");
    q.sets.emplace_back("X", inner_ctx.ids(*x));
    q.values.emplace_back("representative", inner_ctx.id(step.representative));
    q.values.emplace_back("lifted_weight", step.weights[step.representative_index()]);

    const auto inner = induced_subgraph(h, *x);
    auto quotient_division = divide_weighted(step.quotient.graph, step.weights, inner_ctx.child(step.quotient), limits);
    auto inner_division = divide_weighted(inner.graph, restrict_weights(wu, inner), inner_ctx.child(inner), limits);
    local = recombine(h, wu, step, quotient_division, inner_division, limits);

    auto& r = inner_ctx.add("recombination", step.quotient.graph.order() > 0 &&
                                                     quotient_division.p.contains(step.representative_index())
                                                 ? "representative on the perfect side: P = (P' - x) + X_p, W = W' + X_w"
                                                 : "representative on the light side: P = P', W = W' + X");
    r.sets.emplace_back("P", inner_ctx.ids(local.p));
    r.sets.emplace_back("W", inner_ctx.ids(local.w_side));
  } else {
    local = divide_prime(h, inner_ctx, limits);
  }

  PerfectDivision out{positive.lift(local.p, n), positive.lift(local.w_side, n) | support.complement(), w, {}};
  if (auto verdict = verify_perfect_division(g, w, out.p, out.w_side, limits); !verdict)
    throw TheoremViolation("perfect division failed verification: " + verdict.violated, *ctx.trace);
  return out;
}

std::string weight_note(std::int64_t light, std::int64_t heavy) {
  return "heaviest clique on the light side weighs " + std::to_string(light) + ", not below " + std::to_string(heavy);
}

}  // namespace

Verdict verify_two_division(const Graph& g, const VertexSet& a, const VertexSet& b, const Limits& limits) {
  if (a.host_size() != g.order() || b.host_size() != g.order()) return {false, "sets do not belong to the graph"};
  if (a.intersects(b)) return {false, "sides overlap"};
  if ((a | b) != g.vertices()) return {false, "sides do not cover V"};
  const auto omega = clique_number(g, limits).value;
  if (omega <= 1) return {false, "graph has no edge"};
  if (clique_number_within(g, a, limits).value >= omega) return {false, "omega(A) is not below omega(G)"};
  if (clique_number_within(g, b, limits).value >= omega) return {false, "omega(B) is not below omega(G)"};
  return {};
}

Verdict verify_perfect_division(const Graph& g, const WeightFn& w, const VertexSet& p, const VertexSet& w_side,
                                const Limits& limits) {
  if (p.host_size() != g.order() || w_side.host_size() != g.order()) return {false, "sets do not belong to the graph"};
  if (w.size() != g.order()) return {false, "weight function length differs from graph order"};
  if (p.intersects(w_side)) return {false, "sides overlap"};
  if ((p | w_side) != g.vertices()) return {false, "sides do not cover V"};
  if (auto perfect = is_perfect_within(g, p, limits); !perfect.perfect)
    return {false, "P is not perfect (" + perfect.witness->name() + ")"};
  const auto heavy = max_weight_clique(g, w, limits).value;
  const auto light = max_weight_clique_within(g, w, w_side, limits).value;
  if (heavy == 0 ? light != 0 : light >= heavy) return {false, weight_note(light, heavy)};
  return {};
}

void require_p5_c5_free(const Graph& g) {
  if (auto c5 = find_c5(g)) throw NotInClassError("graph contains C5", {*c5});
  if (auto p5 = find_p5(g)) throw NotInClassError("graph contains P5", {*p5});
}

void require_bull_free_class(const Graph& g, PerfectClassHint hint, const Limits& limits) {
  if (auto bull = find_bull(g)) throw NotInClassError("graph contains a bull", {*bull});
  const auto hole = hint == PerfectClassHint::P5Free ? std::nullopt : find_odd_hole(g, limits);
  const auto p5 = hint == PerfectClassHint::OddHoleFree ? std::nullopt : find_p5(g);
  switch (hint) {
    case PerfectClassHint::OddHoleFree:
      if (hole) throw NotInClassError("graph contains an odd hole", {*hole});
      return;
    case PerfectClassHint::P5Free:
      if (p5) throw NotInClassError("graph contains P5", {*p5});
      return;
    case PerfectClassHint::Any:
      if (hole && p5) throw NotInClassError("graph contains both an odd hole and P5", {*hole, *p5});
      return;
  }
}

TwoDivision two_divide(const Graph& g, const Limits& limits) {
  require_p5_c5_free(g);
  return detail::two_divide_trusted(g, limits);
}

TwoDivision detail::two_divide_trusted(const Graph& g, const Limits& limits) {
  Trace trace;
  auto out = two_divide_unchecked(g, TraceContext{&trace, identity_labels(g.order()), 0}, limits);
  out.trace = std::move(trace);
  return out;
}

int DivisionTree::depth() const {
  if (nodes.empty()) return 0;
  std::vector<int> level(nodes.size(), 0);
  int deepest = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    if (node.leaf()) continue;
    for (int c : {node.a_child, node.b_child}) {
      level[static_cast<std::size_t>(c)] = level[i] + 1;
      deepest = std::max(deepest, level[i] + 1);
    }
  }
  return deepest;
}

DivisionTree two_divide_recursive(const Graph& g, const Limits& limits) {
  require_p5_c5_free(g);
  DivisionTree tree;
  tree.nodes.push_back({g.vertices(), 0, -1, -1});
  // Children are appended after their parent, so a forward sweep visits every node.
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const VertexSet s = tree.nodes[i].vertices;
    const auto omega = static_cast<int>(clique_number_within(g, s, limits).value);
    tree.nodes[i].omega = omega;
    if (omega <= 1) continue;
    const auto sub = induced_subgraph(g, s);
    Trace scratch;
    auto d = two_divide_unchecked(sub.graph, TraceContext{&scratch, sub.to_host, 0}, limits);
    const int a_index = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back({sub.lift(d.a, g.order()), 0, -1, -1});
    tree.nodes.push_back({sub.lift(d.b, g.order()), 0, -1, -1});
    tree.nodes[i].a_child = a_index;
    tree.nodes[i].b_child = a_index + 1;
  }
  return tree;
}

TwoDivisibilityVerdict is_two_divisible_oracle(const Graph& g, const Limits& limits) {
  const int n = g.order();
  limits.require(n, limits.two_divisible_oracle_max_n, "two-divisibility oracle");
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint8_t> omega(total, 0);
  for (std::uint64_t s = 1; s < total; ++s) {
    const int v = std::countr_zero(s);
    const std::uint64_t rest = s & ~bit(v);
    omega[s] = std::max<std::uint8_t>(omega[rest], static_cast<std::uint8_t>(1 + omega[rest & g.row(v)]));
  }
  DeadlineTicker ticker(limits);
  for (int size = 2; size <= n; ++size)
    for (std::uint64_t s = 1; s < total; ++s) {
      if (std::popcount(s) != size || omega[s] < 2) continue;
      const std::uint64_t low = s & (~s + 1);
      const std::uint64_t others = s & ~low;
      bool splits = false;
      // Enumerate A = low + subset of others; B = S - A.
      for (std::uint64_t sub = others;; sub = (sub - 1) & others) {
        ticker.tick();
        const std::uint64_t a = sub | low;
        if (omega[a] < omega[s] && omega[s & ~a] < omega[s]) {
          splits = true;
          break;
        }
        if (sub == 0) break;
      }
      if (!splits) return {false, VertexSet::from_bits(n, s)};
    }
  return {true, std::nullopt};
}

QuotientStep quotient_by_homogeneous_set(const Graph& g, const WeightFn& w, const VertexSet& x, const Limits& limits) {
  if (!is_homogeneous_set(g, x)) throw InvalidArgument("quotient needs a homogeneous set");
  if (w.size() != g.order()) throw InvalidArgument("weight function length differs from graph order");
  QuotientStep step;
  step.x = x;
  step.representative = x.first();
  step.quotient = induced_subgraph(g, x.complement().with(step.representative));
  std::vector<std::int64_t> lifted;
  for (int v : step.quotient.to_host)
    lifted.push_back(v == step.representative ? max_weight_clique_within(g, w, x, limits).value : w[v]);
  step.weights = WeightFn(std::move(lifted));
  return step;
}

PerfectDivision recombine(const Graph& g, const WeightFn& w, const QuotientStep& step,
                          const PerfectDivision& quotient_division, const PerfectDivision& inner_division,
                          const Limits& limits) {
  const int n = g.order();
  const auto inner = induced_subgraph(g, step.x);
  const VertexSet p_quot = step.quotient.lift(quotient_division.p, n);
  const VertexSet w_quot = step.quotient.lift(quotient_division.w_side, n);
  const VertexSet x_p = inner.lift(inner_division.p, n);
  const VertexSet x_w = inner.lift(inner_division.w_side, n);

  PerfectDivision out;
  out.weight = w;
  if (w_quot.contains(step.representative)) {
    out.p = p_quot;
    out.w_side = w_quot | step.x;
  } else {
    out.p = p_quot.without(step.representative) | x_p;
    out.w_side = w_quot | x_w;
  }
  if (auto verdict = verify_perfect_division(g, w, out.p, out.w_side, limits); !verdict) {
    TraceStep failed{"recombination", 0, "recombined division failed verification: " + verdict.violated, {}, {}};
    failed.sets.emplace_back("P", out.p.members());
    failed.sets.emplace_back("W", out.w_side.members());
    throw TheoremViolation("recombination failed verification: " + verdict.violated, {failed});
  }
  return out;
}

std::optional<int> find_perfect_nonneighborhood_vertex(const Graph& g, const Limits& limits) {
  for (int v = 0; v < g.order(); ++v)
    if (is_perfect_within(g, non_neighborhood(g, v), limits).perfect) return v;
  return std::nullopt;
}

PerfectDivision perfect_divide(const Graph& g, const WeightFn& w, PerfectClassHint hint, const Limits& limits) {
  if (w.size() != g.order()) throw InvalidArgument("weight function length differs from graph order");
  require_bull_free_class(g, hint, limits);
  return detail::perfect_divide_trusted(g, w, limits);
}

PerfectDivision detail::perfect_divide_trusted(const Graph& g, const WeightFn& w, const Limits& limits) {
  if (w.size() != g.order()) throw InvalidArgument("weight function length differs from graph order");
  Trace trace;
  auto out = divide_weighted(g, w, TraceContext{&trace, identity_labels(g.order()), 0}, limits);
  out.trace = std::move(trace);
  return out;
}

PerfectDivision perfect_divide(const Graph& g, PerfectClassHint hint, const Limits& limits) {
  auto out = perfect_divide(g, WeightFn::unit(g.order()), hint, limits);
  out.weight.reset();
  return out;
}

C5Relation classify_against_c5(const Graph& g, const std::array<int, 5>& c, int v) {
  Embedding hole{Pattern::C5, {c.begin(), c.end()}, {}};
  if (!is_valid_embedding(g, hole)) throw InvalidArgument("classify_against_c5 needs an induced C5");
  if (v < 0 || v >= g.order() || std::find(c.begin(), c.end(), v) != c.end())
    throw InvalidArgument("classify_against_c5 needs a vertex outside the C5");

  auto at = [&](int i) { return c[static_cast<std::size_t>(((i % 5) + 5) % 5)]; };
  auto adj = [&](int i) { return g.adjacent(v, at(i)); };
  int count = 0;
  for (int i = 0; i < 5; ++i) count += adj(i) ? 1 : 0;

  if (count == 0) return {C5Relation::Kind::Anticenter, 0, std::nullopt};
  if (count == 5) return {C5Relation::Kind::Center, 0, std::nullopt};
  if (count == 4)
    for (int i = 0; i < 5; ++i)
      if (!adj(i)) return {C5Relation::Kind::Star, i + 1, std::nullopt};
  for (int i = 0; i < 5; ++i)
    if (adj(i - 1) && adj(i + 1) && !adj(i + 2) && !adj(i - 2)) return {C5Relation::Kind::Clone, i + 1, std::nullopt};

  C5Relation out{C5Relation::Kind::Violation, 0, std::nullopt};
  if (count == 1) {
    for (int i = 0; i < 5; ++i)
      if (adj(i)) out.witness = Embedding{Pattern::P5, {v, at(i), at(i + 1), at(i + 2), at(i + 3)}, {}};
    return out;
  }
  // Remaining patterns: two adjacent neighbours, or those two plus the opposite vertex.
  for (int i = 0; i < 5; ++i)
    if (adj(i) && adj(i + 1) && !adj(i - 1) && !adj(i + 2)) {
      out.witness = Embedding{Pattern::Bull, {at(i - 1), at(i), at(i + 1), v, at(i + 2)}, {}};
      return out;
    }
  return out;
}

std::string to_string(C5Relation::Kind kind) {
  switch (kind) {
    case C5Relation::Kind::Clone:
      return "clone";
    case C5Relation::Kind::Star:
      return "star";
    case C5Relation::Kind::Center:
      return "center";
    case C5Relation::Kind::Anticenter:
      return "anticenter";
    case C5Relation::Kind::Violation:
      break;
  }
  return "violation";
}

}  // namespace divisible
