#include "holecert/exact.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "holecert/corpus.hpp"
#include "holecert/error.hpp"
#include "holecert/holes.hpp"
#include "holecert/verifier.hpp"

namespace holecert {
namespace {

using testing::fixture;
using testing::graph;

TEST(FeasibleTest, SingleEdge) {
  Graph k2 = graph("e u v");
  EXPECT_EQ(feasible(k2, 0).status, Feasibility::Infeasible);
  auto one = feasible(k2, 1);
  ASSERT_EQ(one.status, Feasibility::Feasible);
  EXPECT_TRUE(verify::verify_witness(k2, *one.witness, one.isolated, 1));
}

TEST(FeasibleTest, FourCycle) {
  Graph c4 = fixture("c4");
  EXPECT_EQ(feasible(c4, 1).status, Feasibility::Infeasible);
  auto two = feasible(c4, 2);
  ASSERT_EQ(two.status, Feasibility::Feasible);
  EXPECT_TRUE(verify::verify_witness(c4, *two.witness, two.isolated, 2));
}

TEST(FeasibleTest, TinyBudgetIsReported) {
  SolveBudget tiny;
  tiny.node_limit = 1;
  EXPECT_EQ(feasible(fixture("domino"), 2, tiny).status, Feasibility::BudgetExhausted);
  EXPECT_THROW(exact_k(fixture("domino"), tiny), BudgetExhausted);
}

TEST(ExactTest, PinnedFixtureValues) {
  const std::pair<const char*, std::size_t> pinned[] = {
      {"c4", 2}, {"c5", 2}, {"domino", 3}, {"housex", 2}, {"wheel5", 2}};
  for (const auto& [name, k] : pinned) {
    Graph g = fixture(name);
    auto r = exact_k(g);
    EXPECT_EQ(r.k, k) << name;
    EXPECT_TRUE(verify::verify_witness(g, r.witness, r.isolated, r.k)) << name;
  }
}

TEST(ExactTest, EdgelessAndChordal) {
  auto edgeless = exact_k(graph("v a;v b;v c"));
  EXPECT_EQ(edgeless.k, 0u);
  EXPECT_EQ(edgeless.witness.arc_count(), 0u);

  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 100) {
    Graph g = corpus::random_graph(3 + rng() % 5, {1, 2}, rng);
    if (g.edge_count() == 0 || !std::holds_alternative<Peo>(chordality(g))) continue;
    // An isolated vertex can take the bottom prey slot.
    bool isolated = false;
    for (std::size_t i = 0; i < g.size(); ++i) isolated = isolated || g.degree(i) == 0;
    ASSERT_EQ(exact_k(g).k, isolated ? 0u : 1u) << corpus::edge_code(g);
    ++checked;
  }
}

TEST(ExactTest, FeasibilityIsMonotone) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    Graph g = corpus::random_graph(4 + rng() % 5, {1, 2}, rng);
    for (std::size_t k = 0; k < 4; ++k) {
      if (feasible(g, k).status == Feasibility::Feasible) {
        ASSERT_EQ(feasible(g, k + 1).status, Feasibility::Feasible) << corpus::edge_code(g);
      }
    }
  }
}

TEST(ExactTest, TooManyVertices) {
  Graph big = corpus::cycle_graph(kExactMaxVertices + 1);
  EXPECT_EQ(feasible(big, 2).status, Feasibility::BudgetExhausted);
  EXPECT_THROW(exact_k(big), BudgetExhausted);
}

}  // namespace
}  // namespace holecert
