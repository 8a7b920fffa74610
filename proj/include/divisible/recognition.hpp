#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "divisible/errors.hpp"
#include "divisible/graph.hpp"
#include "divisible/limits.hpp"

namespace divisible {

enum class Pattern { P5, C5, Bull, OddHole, OddAntihole, Custom };

/// An induced copy of a pattern: vertices[i] is the host image of pattern vertex i.
///
/// Holes list their vertices in cycle order; antiholes list them in cycle
/// order of the complement.
struct Embedding {
  Pattern pattern = Pattern::Custom;
  std::vector<int> vertices;
  /// Only used when pattern == Custom.
  Graph custom;

  std::string name() const;
  bool operator==(const Embedding&) const = default;
};

Graph p5_pattern();
Graph c5_pattern();
Graph bull_pattern();
/// The graph an embedding claims to induce.
Graph pattern_of(const Embedding& e);

/// Injective, in range, and adjacency-exact against pattern_of(e).
bool is_valid_embedding(const Graph& g, const Embedding& e);

/// First induced copy of `pattern` in lexicographic order of the image vector.
std::optional<Embedding> find_induced(const Graph& g, const Graph& pattern);
/// Visits every induced copy in lexicographic order until `visit` returns false.
void for_each_induced(const Graph& g, const Graph& pattern, const std::function<bool(const std::vector<int>&)>& visit);

std::optional<Embedding> find_p5(const Graph& g);
std::optional<Embedding> find_c5(const Graph& g);
std::optional<Embedding> find_bull(const Graph& g);

/// Shortest induced odd cycle of length at least 5, smallest start vertex first.
std::optional<Embedding> find_odd_hole(const Graph& g, const Limits& limits = {});
std::optional<Embedding> find_odd_antihole(const Graph& g, const Limits& limits = {});

struct PerfectionResult {
  bool perfect = true;
  std::optional<Embedding> witness;
};

/// Perfect iff neither an odd hole nor an odd antihole is present.
PerfectionResult is_perfect(const Graph& g, const Limits& limits = {});
/// Perfection of G[x]; a witness is reported in host vertex ids.
PerfectionResult is_perfect_within(const Graph& g, const VertexSet& x, const Limits& limits = {});

bool is_homogeneous_set(const Graph& g, const VertexSet& x);
/// Grows every vertex pair into the smallest set that no outside vertex
/// splits, and returns the first proper one (pairs in lexicographic order).
/// Absence means the graph is prime.
std::optional<VertexSet> find_homogeneous_set(const Graph& g);

struct ClassReport {
  bool p5_free = true;
  bool c5_free = true;
  bool bull_free = true;
  bool odd_hole_free = true;
  bool perfect = true;
  std::optional<Embedding> p5_witness;
  std::optional<Embedding> c5_witness;
  std::optional<Embedding> bull_witness;
  std::optional<Embedding> odd_hole_witness;
  std::optional<Embedding> imperfection_witness;
};

ClassReport classify(const Graph& g, const Limits& limits = {});

/// Input lies outside the class an algorithm requires.
class NotInClassError : public Error {
 public:
  NotInClassError(const std::string& what, std::vector<Embedding> witnesses)
      : Error(ErrorKind::NotInClass, what), witnesses_(std::move(witnesses)) {}
  const std::vector<Embedding>& witnesses() const { return witnesses_; }

 private:
  std::vector<Embedding> witnesses_;
};

}  // namespace divisible
