#include "divisible/coloring.hpp"

#include <sstream>

#include "divisible/oracles.hpp"

namespace divisible {
namespace {

struct Painter {
  const Graph& root;
  const Limits& limits;
  std::vector<int> colour;
  Trace trace;
  int next_colour = 0;

  void palette_step(const std::vector<int>& labels, const VertexSet& first_side, const VertexSet& second_side,
                    int first_from, int second_from, int depth) {
    TraceStep step{"palette", depth, {}, {}, {}};
    auto ids = [&](const VertexSet& s) {
      std::vector<int> out;
      for (int v : s) out.push_back(labels[static_cast<std::size_t>(v)]);
      return out;
    };
    step.sets.emplace_back("first", ids(first_side));
    step.sets.emplace_back("second", ids(second_side));
    step.values.emplace_back("first_from", first_from);
    step.values.emplace_back("first_to", second_from);
    step.values.emplace_back("second_from", second_from);
    step.values.emplace_back("second_to", next_colour);
    trace.push_back(std::move(step));
  }

  // labels: local vertex -> root vertex.
  void two(const Graph& g, const std::vector<int>& labels, int depth) {
    if (g.order() == 0) return;
    if (clique_number(g, limits).value <= 1) {
      for (int label : labels) colour[static_cast<std::size_t>(label)] = next_colour;
      ++next_colour;
      return;
    }
    auto sides = two_divide_unchecked(g);
    const int a_from = next_colour;
    recurse_two(g, labels, sides.first, depth);
    const int b_from = next_colour;
    recurse_two(g, labels, sides.second, depth);
    palette_step(labels, sides.first, sides.second, a_from, b_from, depth);
  }

  void recurse_two(const Graph& g, const std::vector<int>& labels, const VertexSet& side, int depth) {
    const auto sub = induced_subgraph(g, side);
    two(sub.graph, relabel(labels, sub), depth + 1);
  }

  void perfect(const Graph& g, const std::vector<int>& labels, int depth) {
    if (g.order() == 0) return;
    const auto division = perfect_divide_unchecked(g);
    const int p_from = next_colour;
    const auto p_sub = induced_subgraph(g, division.p);
    const auto exact = chromatic_number_exact(p_sub.graph, limits);
    for (std::size_t i = 0; i < p_sub.to_host.size(); ++i)
      colour[static_cast<std::size_t>(labels[static_cast<std::size_t>(p_sub.to_host[i])])] = p_from + exact.assignment[i];
    next_colour += exact.colors;
    const int w_from = next_colour;
    const auto w_sub = induced_subgraph(g, division.w_side);
    perfect(w_sub.graph, relabel(labels, w_sub), depth + 1);
    palette_step(labels, division.p, division.w_side, p_from, w_from, depth);
  }

  static std::vector<int> relabel(const std::vector<int>& labels, const InducedSubgraph& sub) {
    std::vector<int> out;
    for (int v : sub.to_host) out.push_back(labels[static_cast<std::size_t>(v)]);
    return out;
  }

  std::pair<VertexSet, VertexSet> two_divide_unchecked(const Graph& g) const;
  PerfectDivision perfect_divide_unchecked(const Graph& g) const;
};

std::pair<VertexSet, VertexSet> Painter::two_divide_unchecked(const Graph& g) const {
  auto d = detail::two_divide_trusted(g, limits);
  return {d.a, d.b};
}

PerfectDivision Painter::perfect_divide_unchecked(const Graph& g) const {
  return detail::perfect_divide_trusted(g, WeightFn::unit(g.order()), limits);
}

ColoringOutcome finish(const Graph& g, Painter& painter, BoundKind kind, const Limits& limits) {
  ColoringOutcome out;
  out.coloring.assignment = std::move(painter.colour);
  out.coloring.palette_size = painter.next_colour;
  const int omega = static_cast<int>(clique_number(g, limits).value);
  out.certificate = {omega, kind, chi_bound(kind, omega), painter.next_colour};
  out.trace = std::move(painter.trace);
  if (!is_proper_coloring(g, out.coloring.assignment))
    throw TheoremViolation("recursive colouring is not proper", out.trace);
  if (out.certificate.colors_used > out.certificate.bound_value)
    throw TheoremViolation("recursive colouring exceeds its bound", out.trace);
  return out;
}

std::vector<int> identity(int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v) out.push_back(v);
  return out;
}

}  // namespace

std::string to_string(BoundKind kind) { return kind == BoundKind::PowerOfTwo ? "power-of-two" : "quadratic"; }

std::int64_t chi_bound(BoundKind kind, int omega) {
  if (omega <= 0) return 0;
  if (kind == BoundKind::PowerOfTwo) return std::int64_t{1} << (omega - 1);
  return static_cast<std::int64_t>(omega) * (omega + 1) / 2;
}

ColoringOutcome color_via_two_division(const Graph& g, const Limits& limits) {
  require_p5_c5_free(g);
  Painter painter{g, limits, std::vector<int>(static_cast<std::size_t>(g.order()), -1), {}, 0};
  painter.two(g, identity(g.order()), 0);
  return finish(g, painter, BoundKind::PowerOfTwo, limits);
}

ColoringOutcome color_via_perfect_division(const Graph& g, PerfectClassHint hint, const Limits& limits) {
  require_bull_free_class(g, hint, limits);
  Painter painter{g, limits, std::vector<int>(static_cast<std::size_t>(g.order()), -1), {}, 0};
  painter.perfect(g, identity(g.order()), 0);
  return finish(g, painter, BoundKind::Quadratic, limits);
}

std::vector<AuditRow> audit_bounds(const std::vector<std::pair<std::string, Graph>>& corpus, BoundKind kind,
                                   const Limits& limits) {
  std::vector<AuditRow> rows;
  for (const auto& [id, g] : corpus) {
    AuditRow row;
    row.id = id;
    try {
      row.omega = static_cast<int>(clique_number(g, limits).value);
      row.chi = chromatic_number_exact(g, limits).colors;
      const auto outcome =
          kind == BoundKind::PowerOfTwo ? color_via_two_division(g, limits) : color_via_perfect_division(g, PerfectClassHint::Any, limits);
      row.used = outcome.certificate.colors_used;
      row.bound = outcome.certificate.bound_value;
      row.slack = *row.bound - *row.used;
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string audit_to_csv(const std::vector<AuditRow>& rows) {
  std::ostringstream out;
  out << "id,omega,chi,used,bound,slack\n";
  auto cell = [&](const auto& value) {
    if (value) out << *value;
  };
  for (const auto& row : rows) {
    out << row.id << ',' << row.omega << ',';
    cell(row.chi);
    out << ',';
    cell(row.used);
    out << ',';
    cell(row.bound);
    out << ',';
    cell(row.slack);
    out << '\n';
  }
  return out.str();
}

}  // namespace divisible
