#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "divisible/graph.hpp"
#include "divisible/limits.hpp"
#include "divisible/recognition.hpp"
#include "divisible/trace.hpp"

namespace divisible {

/// Partition (a, b) of V with omega(a) < omega(G) and omega(b) < omega(G).
struct TwoDivision {
  VertexSet a;
  VertexSet b;
  Trace trace;
};

/// Partition (p, w_side) with G[p] perfect and the heaviest clique of
/// G[w_side] strictly lighter than the heaviest clique of G.
struct PerfectDivision {
  VertexSet p;
  VertexSet w_side;
  std::optional<WeightFn> weight;
  Trace trace;
};

struct Verdict {
  bool ok = true;
  /// Names the first violated clause when !ok.
  std::string violated;
  explicit operator bool() const { return ok; }
};

Verdict verify_two_division(const Graph& g, const VertexSet& a, const VertexSet& b, const Limits& limits = {});

/// With all weights zero no clique is heavier than the empty one, so the
/// weight clause only asks that w_side carry no positive weight.
Verdict verify_perfect_division(const Graph& g, const WeightFn& w, const VertexSet& p, const VertexSet& w_side,
                                const Limits& limits = {});

/// Throws NotInClassError carrying a P5 or C5 witness.
void require_p5_c5_free(const Graph& g);

enum class PerfectClassHint { Any, OddHoleFree, P5Free };

/// Bull-free and (odd-hole-free or P5-free), narrowed by the hint.
void require_bull_free_class(const Graph& g, PerfectClassHint hint = PerfectClassHint::Any, const Limits& limits = {});

/// Divides a (P5, C5)-free graph with at least one edge.
///
/// Each component H is handled separately: pick the smallest vertex v, split
/// M(v) into components C_1..C_t. If each C_i has a vertex of N(v) complete
/// to it, H splits as (M(v) + v, N(v)). Otherwise, with C_1 the first
/// component lacking such a vertex, choose n in N(v) with a neighbour in C_1
/// and the most neighbours in M(v); H splits as (N(n), H - N(n)).
/// Single-vertex components join a.
///
/// Throws NotInClassError, DegenerateClique when omega(G) <= 1, or
/// TheoremViolation when the result fails verification.
TwoDivision two_divide(const Graph& g, const Limits& limits = {});

/// Binary tree of two-divisions down to parts with omega <= 1.
struct DivisionTree {
  struct Node {
    VertexSet vertices;
    int omega = 0;
    int a_child = -1;
    int b_child = -1;
    bool leaf() const { return a_child < 0; }
  };
  /// nodes[0] is the root.
  std::vector<Node> nodes;
  int depth() const;
};

DivisionTree two_divide_recursive(const Graph& g, const Limits& limits = {});

struct TwoDivisibilityVerdict {
  bool divisible = true;
  /// An induced subgraph with an edge that admits no two-division.
  std::optional<VertexSet> counterexample;
};

/// Exhaustive check over every induced subgraph with at least one edge and
/// every bipartition of it. Edgeless subgraphs are exempt.
TwoDivisibilityVerdict is_two_divisible_oracle(const Graph& g, const Limits& limits = {});

/// G with the homogeneous set x contracted to its smallest member.
struct QuotientStep {
  VertexSet x;
  int representative = -1;
  /// Quotient graph on (V - x) + representative, mapped back to host ids.
  InducedSubgraph quotient;
  /// Host weights, except the representative carries the heaviest clique weight of G[x].
  WeightFn weights;
  int representative_index() const { return quotient.local_index(representative); }
};

QuotientStep quotient_by_homogeneous_set(const Graph& g, const WeightFn& w, const VertexSet& x,
                                         const Limits& limits = {});

/// Lifts a division of the quotient and a division of G[x] to a division of G.
/// Divisions are given in the local ids of the quotient and of G[x]. The
/// result is verified directly; failure throws TheoremViolation.
PerfectDivision recombine(const Graph& g, const WeightFn& w, const QuotientStep& step,
                          const PerfectDivision& quotient_division, const PerfectDivision& inner_division,
                          const Limits& limits = {});

/// Smallest v with G[M(v)] perfect.
std::optional<int> find_perfect_nonneighborhood_vertex(const Graph& g, const Limits& limits = {});

/// Perfect weight division of a bull-free graph that is odd-hole-free or P5-free.
///
/// Zero-weight vertices go to w_side. On the positive-weight part, a
/// homogeneous set is contracted and both the quotient and the set are divided
/// recursively; a prime part is split around a vertex v with G[M(v)] perfect
/// as (M(v) + v, N(v)). Every level is verified.
PerfectDivision perfect_divide(const Graph& g, const WeightFn& w, PerfectClassHint hint = PerfectClassHint::Any,
                               const Limits& limits = {});
PerfectDivision perfect_divide(const Graph& g, PerfectClassHint hint = PerfectClassHint::Any,
                               const Limits& limits = {});

/// How a vertex outside an induced C5 attaches to it. Indices are 1..5 for c_1..c_5.
struct C5Relation {
  enum class Kind { Clone, Star, Center, Anticenter, Violation };
  Kind kind = Kind::Violation;
  int index = 0;
  /// For violations: the induced P5 or bull that the attachment creates.
  std::optional<Embedding> witness;
};

namespace detail {
/// The constructions without the class-membership check, for recursions that
/// checked the root once and rely on the classes being hereditary.
TwoDivision two_divide_trusted(const Graph& g, const Limits& limits = {});
PerfectDivision perfect_divide_trusted(const Graph& g, const WeightFn& w, const Limits& limits = {});
}  // namespace detail

C5Relation classify_against_c5(const Graph& g, const std::array<int, 5>& c, int v);

std::string to_string(C5Relation::Kind kind);

}  // namespace divisible
