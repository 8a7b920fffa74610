#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "divisible/graph.hpp"
#include "divisible/limits.hpp"

namespace divisible {

enum class ClassFlag {
  P5Free,
  C5Free,
  BullFree,
  OddHoleFree,
  Perfect,
  /// bull-free and (odd-hole-free or P5-free)
  BullFreeDivisible,
  /// P5-free and C5-free
  P5C5Free,
  Connected,
  Prime,
};

struct FlagTest {
  ClassFlag flag;
  bool expected = true;
};

/// Conjunction of (possibly negated) class flags.
///
/// Textual form is a comma-separated list of flag names; "not-" negates:
/// p5free, c5free, bullfree, oddholefree, perfect, pdclass, p5c5free,
/// connected, prime.
class ClassFilter {
 public:
  ClassFilter() = default;
  explicit ClassFilter(std::vector<FlagTest> tests) : tests_(std::move(tests)) {}
  static ClassFilter parse(std::string_view csv);

  bool accepts(const Graph& g, const Limits& limits = {}) const;
  /// Only the tests that survive vertex deletion; used to prune generation.
  bool hereditary_accepts(const Graph& g, const Limits& limits = {}) const;
  bool empty() const { return tests_.empty(); }
  std::string to_string() const;
  const std::vector<FlagTest>& tests() const { return tests_; }

 private:
  std::vector<FlagTest> tests_;
};

bool flag_holds(ClassFlag flag, const Graph& g, const Limits& limits = {});
bool is_hereditary(ClassFlag flag);

/// Where a corpus comes from. Random corpora derive one sub-seed per graph
/// index, so graph i does not depend on the requested count.
struct CorpusSpec {
  enum class Source { Exhaustive, Random, File };

  Source source = Source::Exhaustive;
  int min_n = 1;
  int max_n = 0;
  int random_n = 0;
  double edge_probability = 0.5;
  int count = 0;
  std::string path;
  ClassFilter filter;
  std::uint64_t seed = 0;
  int attempt_budget = 100000;

  /// All non-isomorphic graphs on exactly n vertices.
  static CorpusSpec exhaustive(int n);
  static CorpusSpec exhaustive_range(int min_n, int max_n);
  static CorpusSpec random(int n, double edge_probability, int count, std::uint64_t seed);
  static CorpusSpec file(std::string path);

  std::string describe() const;
};

inline constexpr int kMaxExhaustiveOrder = 10;

/// Streams the corpus. Exhaustive output is ordered by order, then by
/// canonical adjacency; every graph is in canonical labelling.
void generate(const CorpusSpec& spec, const std::function<void(const Graph&)>& sink, const Limits& limits = {});
std::vector<Graph> generate_all(const CorpusSpec& spec, const Limits& limits = {});

/// Non-isomorphic graphs on exactly n vertices whose every induced subgraph
/// passes `hereditary`. Grown one vertex at a time from the previous layer.
std::vector<Graph> enumerate_nonisomorphic(int n, const std::function<bool(const Graph&)>& hereditary = {});

/// Stateless 64-bit mixer for deriving sub-seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

/// G(n, p) from a fully determined seed.
Graph random_graph(int n, double edge_probability, std::uint64_t seed);

/// Weights uniform on 0..max_weight from a fully determined seed.
WeightFn random_weights(int n, std::int64_t max_weight, std::uint64_t seed);

}  // namespace divisible
