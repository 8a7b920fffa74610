#include "divisible/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "divisible/canonical.hpp"
#include "divisible/io.hpp"
#include "divisible/recognition.hpp"

namespace divisible {
namespace {

struct FlagName {
  ClassFlag flag;
  std::string_view name;
};

constexpr FlagName kFlagNames[] = {
    {ClassFlag::P5Free, "p5free"},     {ClassFlag::C5Free, "c5free"},
    {ClassFlag::BullFree, "bullfree"}, {ClassFlag::OddHoleFree, "oddholefree"},
    {ClassFlag::Perfect, "perfect"},   {ClassFlag::BullFreeDivisible, "pdclass"},
    {ClassFlag::P5C5Free, "p5c5free"}, {ClassFlag::Connected, "connected"},
    {ClassFlag::Prime, "prime"},
};

std::string_view flag_name(ClassFlag flag) {
  for (const auto& entry : kFlagNames)
    if (entry.flag == flag) return entry.name;
  return "?";
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void emit_exhaustive(const CorpusSpec& spec, const std::function<void(const Graph&)>& sink, const Limits& limits) {
  if (spec.max_n > kMaxExhaustiveOrder)
    throw InvalidArgument("exhaustive generation is limited to n <= " + std::to_string(kMaxExhaustiveOrder));
  if (spec.min_n < 0 || spec.min_n > spec.max_n) throw InvalidArgument("exhaustive range is empty");
  auto hereditary = [&](const Graph& g) { return spec.filter.hereditary_accepts(g, limits); };
  std::vector<Graph> layer{Graph(0)};
  for (int n = 0; n <= spec.max_n; ++n) {
    if (n > 0) layer = enumerate_nonisomorphic(n, hereditary);
    if (n < spec.min_n) continue;
    for (const auto& g : layer)
      if (spec.filter.accepts(g, limits)) sink(g);
  }
}

// Grows layer n-1 into layer n; shared by enumerate_nonisomorphic.
std::vector<Graph> grow(const std::vector<Graph>& previous, int n, const std::function<bool(const Graph&)>& keep) {
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Graph> out;
  for (const auto& base : previous) {
    for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (n - 1)); ++nbrs) {
      std::vector<std::uint64_t> rows = base.rows();
      rows.push_back(nbrs);
      for (std::uint64_t r = nbrs; r != 0; r &= r - 1) rows[static_cast<std::size_t>(std::countr_zero(r))] |= bit(n - 1);
      auto candidate = canonical_form(Graph::from_adjacency(std::move(rows))).graph;
      if (!seen.insert(candidate.rows()).second) continue;
      if (keep && !keep(candidate)) continue;
      out.push_back(std::move(candidate));
    }
  }
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) { return a.rows() < b.rows(); });
  return out;
}

}  // namespace

bool is_hereditary(ClassFlag flag) { return flag != ClassFlag::Connected && flag != ClassFlag::Prime; }

bool flag_holds(ClassFlag flag, const Graph& g, const Limits& limits) {
  switch (flag) {
    case ClassFlag::P5Free:
      return !find_p5(g);
    case ClassFlag::C5Free:
      return !find_c5(g);
    case ClassFlag::BullFree:
      return !find_bull(g);
    case ClassFlag::OddHoleFree:
      return !find_odd_hole(g, limits);
    case ClassFlag::Perfect:
      return is_perfect(g, limits).perfect;
    case ClassFlag::BullFreeDivisible:
      return !find_bull(g) && (!find_p5(g) || !find_odd_hole(g, limits));
    case ClassFlag::P5C5Free:
      return !find_p5(g) && !find_c5(g);
    case ClassFlag::Connected:
      return is_connected_set(g, g.vertices());
    case ClassFlag::Prime:
      return !find_homogeneous_set(g);
  }
  return false;
}

ClassFilter ClassFilter::parse(std::string_view csv) {
  std::vector<FlagTest> tests;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view word = csv.substr(start, end - start);
    start = end + 1;
    while (!word.empty() && word.front() == ' ') word.remove_prefix(1);
    while (!word.empty() && word.back() == ' ') word.remove_suffix(1);
    if (word.empty()) continue;
    bool expected = true;
    if (word.substr(0, 4) == "not-") {
      expected = false;
      word.remove_prefix(4);
    } else if (word.front() == '!') {
      expected = false;
      word.remove_prefix(1);
    }
    auto it = std::find_if(std::begin(kFlagNames), std::end(kFlagNames), [&](const auto& e) { return e.name == word; });
    if (it == std::end(kFlagNames)) throw InvalidArgument("unknown class flag '" + std::string(word) + "'");
    tests.push_back({it->flag, expected});
  }
  return ClassFilter(std::move(tests));
}

bool ClassFilter::accepts(const Graph& g, const Limits& limits) const {
  return std::all_of(tests_.begin(), tests_.end(),
                     [&](const FlagTest& t) { return flag_holds(t.flag, g, limits) == t.expected; });
}

bool ClassFilter::hereditary_accepts(const Graph& g, const Limits& limits) const {
  return std::all_of(tests_.begin(), tests_.end(), [&](const FlagTest& t) {
    return !(t.expected && is_hereditary(t.flag)) || flag_holds(t.flag, g, limits);
  });
}

std::string ClassFilter::to_string() const {
  std::string out;
  for (const auto& t : tests_) {
    if (!out.empty()) out += ',';
    if (!t.expected) out += "not-";
    out += flag_name(t.flag);
  }
  return out;
}

CorpusSpec CorpusSpec::exhaustive(int n) { return exhaustive_range(n, n); }

CorpusSpec CorpusSpec::exhaustive_range(int min_n, int max_n) {
  CorpusSpec s;
  s.source = Source::Exhaustive;
  s.min_n = min_n;
  s.max_n = max_n;
  return s;
}

CorpusSpec CorpusSpec::random(int n, double edge_probability, int count, std::uint64_t seed) {
  CorpusSpec s;
  s.source = Source::Random;
  s.random_n = n;
  s.edge_probability = edge_probability;
  s.count = count;
  s.seed = seed;
  return s;
}

CorpusSpec CorpusSpec::file(std::string path) {
  CorpusSpec s;
  s.source = Source::File;
  s.path = std::move(path);
  return s;
}

std::string CorpusSpec::describe() const {
  std::ostringstream out;
  switch (source) {
    case Source::Exhaustive:
      out << "exhaustive " << min_n << ".." << max_n;
      break;
    case Source::Random:
      out << "random n=" << random_n << " p=" << edge_probability << " count=" << count << " seed=" << seed;
      break;
    case Source::File:
      out << "file " << path;
      break;
  }
  if (!filter.empty()) out << " filter=" << filter.to_string();
  return out.str();
}

std::vector<Graph> enumerate_nonisomorphic(int n, const std::function<bool(const Graph&)>& hereditary) {
  if (n < 0 || n > kMaxExhaustiveOrder + 1) throw InvalidArgument("enumeration order out of range");
  std::vector<Graph> layer{Graph(0)};
  for (int k = 1; k <= n; ++k) layer = grow(layer, k, hereditary);
  return layer;
}

void generate(const CorpusSpec& spec, const std::function<void(const Graph&)>& sink, const Limits& limits) {
  switch (spec.source) {
    case CorpusSpec::Source::Exhaustive:
      emit_exhaustive(spec, sink, limits);
      return;
    case CorpusSpec::Source::Random: {
      if (spec.count < 1) throw InvalidArgument("random corpus needs count >= 1");
      if (spec.edge_probability < 0.0 || spec.edge_probability > 1.0)
        throw InvalidArgument("edge probability must lie in [0, 1]");
      for (int i = 0; i < spec.count; ++i) {
        bool found = false;
        for (int attempt = 0; attempt < spec.attempt_budget && !found; ++attempt) {
          auto g = random_graph(spec.random_n, spec.edge_probability,
                                mix_seed(spec.seed, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(attempt)));
          if (spec.filter.accepts(g, limits)) {
            sink(g);
            found = true;
          }
        }
        if (!found)
          throw BudgetExceeded("class filter rejected " + std::to_string(spec.attempt_budget) +
                               " random candidates for graph " + std::to_string(i));
      }
      return;
    }
    case CorpusSpec::Source::File:
      for (const auto& g : read_graph_file(spec.path))
        if (spec.filter.accepts(g, limits)) sink(g);
      return;
  }
}

std::vector<Graph> generate_all(const CorpusSpec& spec, const Limits& limits) {
  std::vector<Graph> out;
  generate(spec, [&](const Graph& g) { out.push_back(g); }, limits);
  return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ (b * 0x9e3779b97f4a7c15ULL));
}

Graph random_graph(int n, double edge_probability, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (unit_interval(rng) < edge_probability) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

WeightFn random_weights(int n, std::int64_t max_weight, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> w;
  for (int v = 0; v < n; ++v) w.push_back(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_weight + 1)));
  return WeightFn(std::move(w));
}

}  // namespace divisible
