#include <gtest/gtest.h>

#include <random>
#include <map>
#include <set>

#include "divisible/coloring.hpp"
#include "divisible/corpus.hpp"
#include "divisible/named_graphs.hpp"
#include "divisible/oracles.hpp"
#include "support/naive.hpp"

using namespace divisible;
namespace nm = divisible::named;

namespace {

int distinct(const std::vector<int>& assignment) { return static_cast<int>(std::set<int>(assignment.begin(), assignment.end()).size()); }

void expect_sound(const Graph& g, const ColoringOutcome& out, BoundKind kind) {
  for (const auto& [u, v] : g.edges()) ASSERT_NE(out.coloring.assignment[static_cast<std::size_t>(u)], out.coloring.assignment[static_cast<std::size_t>(v)]);
  EXPECT_EQ(distinct(out.coloring.assignment), out.coloring.palette_size);
  EXPECT_EQ(out.certificate.colors_used, out.coloring.palette_size);
  const int omega = naive::clique_number(g);
  EXPECT_EQ(out.certificate.omega, omega);
  EXPECT_EQ(out.certificate.bound_value, chi_bound(kind, omega));
  EXPECT_LE(out.certificate.colors_used, out.certificate.bound_value);
  EXPECT_GE(out.certificate.colors_used, naive::chromatic_number(g));
}

// Colours named in a palette step's range for a side must not meet the other side's range.
void expect_disjoint_palettes(const ColoringOutcome& out) {
  for (const auto& step : out.trace) {
    ASSERT_EQ(step.kind, "palette");
    std::map<std::string, std::int64_t> v(step.values.begin(), step.values.end());
    EXPECT_LE(v["first_to"], v["second_from"]);
    for (const auto& [name, vertices] : step.sets) {
      const auto lo = name == "first" ? v["first_from"] : v["second_from"];
      const auto hi = name == "first" ? v["first_to"] : v["second_to"];
      for (int u : vertices) {
        const int c = out.coloring.assignment[static_cast<std::size_t>(u)];
        EXPECT_GE(c, lo);
        EXPECT_LT(c, hi);
      }
    }
  }
}

}  // namespace

TEST(BoundTest, Values) {
  EXPECT_EQ(chi_bound(BoundKind::PowerOfTwo, 1), 1);
  EXPECT_EQ(chi_bound(BoundKind::PowerOfTwo, 2), 2);
  EXPECT_EQ(chi_bound(BoundKind::PowerOfTwo, 4), 8);
  EXPECT_EQ(chi_bound(BoundKind::Quadratic, 1), 1);
  EXPECT_EQ(chi_bound(BoundKind::Quadratic, 2), 3);
  EXPECT_EQ(chi_bound(BoundKind::Quadratic, 4), 10);
  EXPECT_EQ(chi_bound(BoundKind::Quadratic, 0), 0);
}

TEST(TwoDivisionColoringTest, Examples) {
  const auto c4 = color_via_two_division(nm::cycle(4));
  EXPECT_EQ(c4.certificate.colors_used, 2);
  EXPECT_EQ(c4.certificate.bound_value, 2);
  const auto bull = color_via_two_division(nm::bull());
  EXPECT_EQ(bull.certificate.bound_value, 4);
  EXPECT_GE(bull.certificate.colors_used, 3);
  EXPECT_LE(bull.certificate.colors_used, 4);
  const auto k1 = color_via_two_division(Graph(1));
  EXPECT_EQ(k1.certificate.colors_used, 1);
  EXPECT_EQ(k1.certificate.bound_value, 1);
  const auto empty = color_via_two_division(Graph(0));
  EXPECT_EQ(empty.certificate.colors_used, 0);
  EXPECT_THROW(color_via_two_division(nm::cycle(5)), NotInClassError);
}

TEST(PerfectDivisionColoringTest, Examples) {
  const auto c5 = color_via_perfect_division(nm::cycle(5));
  EXPECT_EQ(c5.certificate.colors_used, 3);
  EXPECT_EQ(c5.certificate.bound_value, 3);
  // P = {0,2,3} takes the first two colours, W = {1,4} the third.
  EXPECT_LT(c5.coloring.assignment[0], 2);
  EXPECT_LT(c5.coloring.assignment[2], 2);
  EXPECT_LT(c5.coloring.assignment[3], 2);
  EXPECT_EQ(c5.coloring.assignment[1], 2);
  EXPECT_EQ(c5.coloring.assignment[4], 2);
  const auto k4 = color_via_perfect_division(nm::complete(4));
  EXPECT_EQ(k4.certificate.colors_used, 4);
  EXPECT_EQ(k4.certificate.bound_value, 10);
  const auto stable = color_via_perfect_division(nm::edgeless(4));
  EXPECT_EQ(stable.certificate.colors_used, 1);
  EXPECT_EQ(stable.certificate.bound_value, 1);
  EXPECT_THROW(color_via_perfect_division(nm::bull()), NotInClassError);
}

TEST(TwoDivisionColoringTest, SmallClassMembers) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : enumerate_nonisomorphic(n, [](const Graph& h) { return !find_p5(h) && !find_c5(h); })) {
      const auto out = color_via_two_division(g);
      expect_sound(g, out, BoundKind::PowerOfTwo);
      expect_disjoint_palettes(out);
    }
}

TEST(PerfectDivisionColoringTest, SmallClassMembers) {
  auto in_class = [](const Graph& h) { return !find_bull(h) && (!find_p5(h) || !find_odd_hole(h)); };
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : enumerate_nonisomorphic(n, in_class)) {
      const auto out = color_via_perfect_division(g);
      expect_sound(g, out, BoundKind::Quadratic);
      expect_disjoint_palettes(out);
    }
}

TEST(ExactColoringTest, PerfectGraphsUseOmegaColours) {
  std::mt19937_64 rng(61);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto g = naive::random_graph(rng, 1 + trial % 10, 0.5);
    if (!is_perfect(g).perfect) continue;
    EXPECT_EQ(chromatic_number_exact(g).colors, clique_number(g).value);
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(AuditTest, Rows) {
  const auto quad = audit_bounds({{"c5", nm::cycle(5)}}, BoundKind::Quadratic);
  ASSERT_EQ(quad.size(), 1u);
  EXPECT_EQ(quad[0].omega, 2);
  EXPECT_EQ(quad[0].chi, 3);
  EXPECT_EQ(quad[0].bound, 3);
  EXPECT_EQ(quad[0].slack, 0);

  const auto pow = audit_bounds({{"c4", nm::cycle(4)}, {"k3", nm::complete(3)}, {"c5", nm::cycle(5)}}, BoundKind::PowerOfTwo);
  ASSERT_EQ(pow.size(), 3u);
  EXPECT_EQ(pow[0].chi, 2);
  EXPECT_EQ(pow[0].bound, 2);
  EXPECT_EQ(pow[0].slack, 0);
  EXPECT_EQ(pow[1].omega, 3);
  EXPECT_EQ(pow[1].chi, 3);
  EXPECT_EQ(pow[1].bound, 4);
  EXPECT_EQ(pow[1].slack, 1);
  // C5 is outside the class; the row records the error and the audit carries on.
  EXPECT_TRUE(pow[2].error);
  EXPECT_FALSE(pow[2].used);

  const auto csv = audit_to_csv(pow);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "id,omega,chi,used,bound,slack");
  EXPECT_NE(csv.find("k3,3,3,"), std::string::npos);
}

TEST(AuditTest, BudgetErrorsAreRecorded) {
  Limits tight;
  tight.chromatic_max_n = 3;
  const auto rows = audit_bounds({{"c4", nm::cycle(4)}}, BoundKind::PowerOfTwo, tight);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_TRUE(rows[0].error);
}
