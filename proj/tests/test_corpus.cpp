#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <set>

#include "divisible/canonical.hpp"
#include "divisible/corpus.hpp"
#include "divisible/io.hpp"
#include "divisible/named_graphs.hpp"
#include "support/naive.hpp"

using namespace divisible;
namespace nm = divisible::named;

TEST(CanonicalTest, InvariantUnderRelabelling) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 10;
    const auto g = naive::random_graph(rng, n, 0.4);
    const auto h = naive::relabel(g, naive::random_permutation(rng, n));
    const auto cg = canonical_form(g);
    EXPECT_EQ(cg.graph, canonical_form(h).graph);
    EXPECT_TRUE(isomorphic(g, h));
    // The labelling really maps g onto its canonical graph.
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(cg.labeling[static_cast<std::size_t>(i)])] = i;
    EXPECT_EQ(naive::relabel(g, perm), cg.graph);
  }
}

TEST(CanonicalTest, DistinguishesNonIsomorphicGraphs) {
  EXPECT_FALSE(isomorphic(nm::path(4), nm::complete(4)));
  EXPECT_FALSE(isomorphic(nm::cycle(6), Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
  EXPECT_TRUE(isomorphic(nm::cycle(5), complement(nm::cycle(5))));
  EXPECT_TRUE(isomorphic(Graph(0), Graph(0)));
}

TEST(CanonicalTest, CountsOfLabelledClassesMatch) {
  // Orbit-counting check: the 2^10 labelled graphs on five vertices fall into 34 classes.
  std::set<std::vector<std::uint64_t>> classes;
  naive::for_each_labelled_graph(5, [&](const Graph& g) { classes.insert(canonical_form(g).graph.rows()); });
  EXPECT_EQ(classes.size(), 34u);
}

TEST(CorpusTest, KnownCountsOfNonIsomorphicGraphs) {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(enumerate_nonisomorphic(n).size(), expected[n]) << n;
  EXPECT_EQ(generate_all(CorpusSpec::exhaustive(4)).size(), 11u);
  EXPECT_EQ(generate_all(CorpusSpec::exhaustive_range(1, 4)).size(), 18u);
}

TEST(CorpusTest, ConnectedCountsMatch) {
  const std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    auto spec = CorpusSpec::exhaustive(n);
    spec.filter = ClassFilter::parse("connected");
    EXPECT_EQ(generate_all(spec).size(), expected[n]) << n;
  }
}

TEST(CorpusTest, HereditaryPruningKeepsEveryClassMember) {
  // Pruned generation must equal filtering the unpruned enumeration.
  for (const char* flags : {"p5c5free", "pdclass", "perfect", "bullfree,not-perfect", "oddholefree,prime"}) {
    const auto filter = ClassFilter::parse(flags);
    for (int n = 1; n <= 7; ++n) {
      auto spec = CorpusSpec::exhaustive(n);
      spec.filter = filter;
      const auto pruned = generate_all(spec);
      std::size_t direct = 0;
      for (const auto& g : enumerate_nonisomorphic(n)) direct += filter.accepts(g) ? 1 : 0;
      EXPECT_EQ(pruned.size(), direct) << flags << " n=" << n;
      for (const auto& g : pruned) EXPECT_TRUE(filter.accepts(g));
    }
  }
}

TEST(CorpusTest, ExhaustiveGraphsArePairwiseNonIsomorphicAndCanonical) {
  const auto corpus = generate_all(CorpusSpec::exhaustive(6));
  std::set<std::vector<std::uint64_t>> seen;
  for (const auto& g : corpus) {
    EXPECT_EQ(canonical_form(g).graph, g);
    EXPECT_TRUE(seen.insert(g.rows()).second);
  }
}

TEST(CorpusTest, FilterParsing) {
  const auto f = ClassFilter::parse("bullfree, not-perfect,!prime");
  ASSERT_EQ(f.tests().size(), 3u);
  EXPECT_EQ(f.to_string(), "bullfree,not-perfect,not-prime");
  EXPECT_TRUE(ClassFilter::parse("").empty());
  EXPECT_THROW(ClassFilter::parse("p6free"), InvalidArgument);
  EXPECT_TRUE(ClassFilter::parse("not-perfect").accepts(nm::cycle(5)));
  EXPECT_FALSE(ClassFilter::parse("perfect").accepts(nm::cycle(5)));
  EXPECT_TRUE(ClassFilter::parse("pdclass").accepts(nm::cycle(5)));
  EXPECT_FALSE(ClassFilter::parse("pdclass").accepts(nm::cycle(7)));
  EXPECT_FALSE(ClassFilter::parse("prime").accepts(nm::cycle(4)));
}

TEST(CorpusTest, RandomStreamIsDeterministicAndStableUnderCount) {
  auto spec = CorpusSpec::random(6, 0.5, 100, 1234);
  const auto a = generate_all(spec);
  const auto b = generate_all(spec);
  EXPECT_EQ(a, b);
  spec.count = 40;
  const auto prefix = generate_all(spec);
  EXPECT_TRUE(std::equal(prefix.begin(), prefix.end(), a.begin()));
  spec.seed = 1235;
  EXPECT_NE(generate_all(spec), prefix);
}

TEST(CorpusTest, RandomFilterAndBudget) {
  auto spec = CorpusSpec::random(7, 0.5, 20, 9);
  spec.filter = ClassFilter::parse("p5c5free,connected");
  for (const auto& g : generate_all(spec)) EXPECT_TRUE(spec.filter.accepts(g));
  auto impossible = CorpusSpec::random(4, 0.5, 1, 9);
  impossible.filter = ClassFilter::parse("not-p5free");
  impossible.attempt_budget = 50;
  EXPECT_THROW(generate_all(impossible), BudgetExceeded);
  EXPECT_THROW(generate_all(CorpusSpec::random(4, 0.5, 0, 9)), InvalidArgument);
  EXPECT_THROW(generate_all(CorpusSpec::exhaustive(11)), InvalidArgument);
}

TEST(CorpusTest, FileSource) {
  const std::string path = testing::TempDir() + "corpus.g6";
  {
    std::ofstream out(path);
    out << "Dhc\nC~\nC]\n";
  }
  const auto gs = generate_all(CorpusSpec::file(path));
  ASSERT_EQ(gs.size(), 3u);
  EXPECT_EQ(gs[0], nm::cycle(5));
  EXPECT_EQ(gs[1], nm::complete(4));
  EXPECT_THROW(generate_all(CorpusSpec::file(path + ".missing")), IoError);
}

TEST(CorpusTest, SeedMixingAndWeights) {
  EXPECT_EQ(mix_seed(1, 2, 3), mix_seed(1, 2, 3));
  EXPECT_NE(mix_seed(1, 2, 3), mix_seed(1, 3, 2));
  const auto w = random_weights(50, 5, 7);
  EXPECT_EQ(w.size(), 50);
  for (auto x : w.values()) {
    EXPECT_GE(x, 0);
    EXPECT_LE(x, 5);
  }
  EXPECT_EQ(random_weights(50, 5, 7), w);
  EXPECT_EQ(random_graph(12, 0.3, 5), random_graph(12, 0.3, 5));
  EXPECT_EQ(random_graph(12, 0.0, 5).edge_count(), 0);
  EXPECT_EQ(random_graph(12, 1.0, 5).edge_count(), 66);
}
