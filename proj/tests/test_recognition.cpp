#include <gtest/gtest.h>

#include <random>

#include "divisible/corpus.hpp"
#include "divisible/named_graphs.hpp"
#include "divisible/recognition.hpp"
#include "support/naive.hpp"

using namespace divisible;
namespace nm = divisible::named;

namespace {

// Exact vertex sequence check that does not go through is_valid_embedding.
bool hole_in_order(const Graph& g, const std::vector<int>& vs) {
  const int k = static_cast<int>(vs.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)]) != consecutive) return false;
    }
  return true;
}

void check_finders_against_naive(const Graph& g) {
  const std::pair<std::optional<Embedding> (*)(const Graph&), Graph> finders[] = {
      {&find_p5, nm::path(5)}, {&find_c5, nm::cycle(5)}, {&find_bull, nm::bull()}};
  for (const auto& [finder, pattern] : finders) {
    const auto found = finder(g);
    const auto expected = naive::first_induced(g, pattern);
    ASSERT_EQ(found.has_value(), expected.has_value());
    if (found) {
      EXPECT_EQ(found->vertices, *expected);
      EXPECT_TRUE(naive::induces(g, found->vertices, pattern));
      EXPECT_TRUE(is_valid_embedding(g, *found));
    }
  }
  const int hole = naive::shortest_odd_hole(g);
  const auto odd_hole = find_odd_hole(g);
  ASSERT_EQ(odd_hole.has_value(), hole != 0);
  if (odd_hole) {
    EXPECT_EQ(static_cast<int>(odd_hole->vertices.size()), hole);
    EXPECT_TRUE(hole_in_order(g, odd_hole->vertices));
  }
  const auto odd_antihole = find_odd_antihole(g);
  ASSERT_EQ(odd_antihole.has_value(), naive::has_odd_antihole(g));
  if (odd_antihole) EXPECT_TRUE(hole_in_order(naive::complement(g), odd_antihole->vertices));
}

}  // namespace

TEST(RecognitionTest, FindInducedExamples) {
  EXPECT_FALSE(find_induced(nm::cycle(5), p5_pattern()));
  const auto id = find_induced(nm::path(5), p5_pattern());
  ASSERT_TRUE(id);
  EXPECT_EQ(id->vertices, (std::vector<int>{0, 1, 2, 3, 4}));
  const auto tri = find_induced(nm::bull(), nm::complete(3));
  ASSERT_TRUE(tri);
  EXPECT_EQ(tri->vertices, (std::vector<int>{1, 2, 3}));
}

TEST(RecognitionTest, PatternFinderExamples) {
  const auto bull = find_bull(nm::bull());
  ASSERT_TRUE(bull);
  EXPECT_EQ(bull->vertices, (std::vector<int>{0, 1, 2, 3, 4}));
  const auto p5 = find_p5(nm::cycle(6));
  ASSERT_TRUE(p5);
  EXPECT_EQ(p5->vertices, (std::vector<int>{0, 1, 2, 3, 4}));
  const auto c5 = find_c5(nm::petersen());
  ASSERT_TRUE(c5);
  EXPECT_TRUE(naive::induces(nm::petersen(), c5->vertices, nm::cycle(5)));
}

TEST(RecognitionTest, OddHoleExamples) {
  const auto c7 = find_odd_hole(nm::cycle(7));
  ASSERT_TRUE(c7);
  EXPECT_EQ(c7->vertices.size(), 7u);
  EXPECT_EQ(c7->name(), "odd-hole(7)");
  EXPECT_FALSE(find_odd_hole(nm::cycle(6)));
  const auto anti = find_odd_antihole(complement(nm::cycle(7)));
  ASSERT_TRUE(anti);
  EXPECT_EQ(anti->vertices.size(), 7u);
  EXPECT_TRUE(is_valid_embedding(complement(nm::cycle(7)), *anti));
  // C5 is its own complement, so both searches report it.
  EXPECT_TRUE(find_odd_antihole(nm::cycle(5)));
}

TEST(RecognitionTest, PerfectionExamples) {
  const auto c5 = is_perfect(nm::cycle(5));
  EXPECT_FALSE(c5.perfect);
  ASSERT_TRUE(c5.witness);
  EXPECT_EQ(c5.witness->vertices.size(), 5u);
  EXPECT_TRUE(is_perfect(nm::cycle(6)).perfect);
  EXPECT_TRUE(naive::perfect_by_definition(nm::cycle(6)));
  EXPECT_FALSE(is_perfect(complement(nm::cycle(7))).perfect);
  EXPECT_TRUE(is_perfect(Graph(0)).perfect);
}

TEST(RecognitionTest, PerfectWithinReportsHostIds) {
  // A C5 on 2..6 plus two isolated vertices.
  const auto g = Graph::from_edges(7, {{2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2}});
  const auto r = is_perfect_within(g, VertexSet(7, {0, 2, 3, 4, 5, 6}));
  EXPECT_FALSE(r.perfect);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(is_valid_embedding(g, *r.witness));
  EXPECT_TRUE(is_perfect_within(g, VertexSet(7, {0, 1, 2, 3, 4, 5})).perfect);
}

TEST(RecognitionTest, HomogeneousSetExamples) {
  const auto c4 = find_homogeneous_set(nm::cycle(4));
  ASSERT_TRUE(c4);
  EXPECT_TRUE(*c4 == VertexSet(4, {0, 2}) || *c4 == VertexSet(4, {1, 3}));
  EXPECT_FALSE(find_homogeneous_set(nm::cycle(5)));
  EXPECT_FALSE(naive::has_homogeneous_set(nm::cycle(5)));
  EXPECT_FALSE(find_homogeneous_set(nm::bull()));
  EXPECT_FALSE(naive::has_homogeneous_set(nm::bull()));
  EXPECT_FALSE(is_homogeneous_set(nm::cycle(4), VertexSet(4, {0})));
  EXPECT_FALSE(is_homogeneous_set(nm::cycle(4), VertexSet::full(4)));
}

TEST(RecognitionTest, ClassifyExamples) {
  const auto c5 = classify(nm::cycle(5));
  EXPECT_TRUE(c5.p5_free);
  EXPECT_FALSE(c5.c5_free);
  EXPECT_TRUE(c5.bull_free);
  EXPECT_FALSE(c5.odd_hole_free);
  EXPECT_FALSE(c5.perfect);
  ASSERT_TRUE(c5.c5_witness);

  const auto p4 = classify(nm::path(4));
  EXPECT_TRUE(p4.p5_free && p4.c5_free && p4.bull_free && p4.odd_hole_free && p4.perfect);

  const auto c7 = classify(nm::cycle(7));
  EXPECT_FALSE(c7.p5_free);
  EXPECT_TRUE(c7.c5_free);
  EXPECT_FALSE(c7.odd_hole_free);
  ASSERT_TRUE(c7.odd_hole_witness);
  EXPECT_EQ(c7.odd_hole_witness->vertices.size(), 7u);
}

TEST(RecognitionTest, FindersAgreeWithNaiveOnAllSmallGraphs) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : enumerate_nonisomorphic(n)) check_finders_against_naive(g);
}

TEST(RecognitionTest, FindersAgreeWithNaiveOnLabelledGraphs) {
  // Every labelling matters for the lexicographic choice, so also run over all
  // labelled graphs on five vertices.
  naive::for_each_labelled_graph(5, [](const Graph& g) { check_finders_against_naive(g); });
}

TEST(RecognitionTest, FindersAgreeWithNaiveOnRandomGraphs) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial)
    check_finders_against_naive(naive::random_graph(rng, 5 + trial % 4, 0.3 + 0.1 * (trial % 5)));
}

TEST(RecognitionTest, PerfectionAgreesWithDefinition) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : enumerate_nonisomorphic(n)) {
      const auto r = is_perfect(g);
      ASSERT_EQ(r.perfect, naive::perfect_by_definition(g));
      if (!r.perfect) {
        ASSERT_TRUE(r.witness);
        EXPECT_TRUE(is_valid_embedding(g, *r.witness));
      }
    }
}

TEST(RecognitionTest, HomogeneousSetAgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = naive::random_graph(rng, 3 + trial % 8, 0.2 + 0.1 * (trial % 7));
    const auto found = find_homogeneous_set(g);
    ASSERT_EQ(found.has_value(), naive::has_homogeneous_set(g));
    if (found) EXPECT_TRUE(naive::is_homogeneous(g, static_cast<naive::Mask>(found->bits())));
  }
}

TEST(RecognitionTest, OddHoleFreeImpliesC5Free) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const auto report = classify(naive::random_graph(rng, 5 + trial % 6, 0.45));
    if (report.odd_hole_free) EXPECT_TRUE(report.c5_free);
    if (!report.c5_free) EXPECT_FALSE(report.odd_hole_free);
  }
}

TEST(RecognitionTest, RecognitionBudget) {
  Limits tight;
  tight.recognition_max_n = 6;
  EXPECT_THROW(find_odd_hole(nm::cycle(7), tight), BudgetExceeded);
}
