#include <gtest/gtest.h>

#include "pedigree/adjacency.hpp"
#include "pedigree/error.hpp"
#include "pedigree/rng.hpp"
#include "test_support.hpp"

namespace pedigree {
namespace {

bool naive_adjacent(const InsertionHistory& a, const InsertionHistory& b) {
  const auto g = test::naive_graph(test::to_pairs(a), test::to_pairs(b), a.length());
  std::vector<test::Edge> edges;
  for (const auto& [lo, hi, type] : g.edges) edges.emplace_back(lo, hi);
  return test::count_components(g.vertices, edges) <= 1;
}

TEST(Adjacency, WorkedExampleIsAdjacent) {
  const Tour a({1, 4, 7, 5, 2, 6, 8, 3, 10, 9});
  const Tour b({1, 5, 2, 10, 6, 3, 7, 4, 8, 9});
  const auto verdict = pedigree_adjacent(a, b);
  EXPECT_TRUE(verdict.adjacent);
  EXPECT_EQ(verdict.witness.vertices(), (std::vector<Node>{4, 5, 7, 8, 9, 10}));
  EXPECT_EQ(verdict.witness.edges().size(), 6u);
  EXPECT_TRUE(pedigree_adjacent(b, a).adjacent);
}

TEST(Adjacency, PrefixWithTwoComponentsIsNotAdjacent) {
  const auto a = test::alice_example().prefix(8), b = test::bob_example().prefix(8);
  const auto verdict = pedigree_adjacent(a, b);
  EXPECT_FALSE(verdict.adjacent);
  EXPECT_EQ(verdict.witness.component_count(), 2);
  EXPECT_FALSE(pedigree_adjacent(replay_history(a, 8), replay_history(b, 8)).adjacent);
}

TEST(Adjacency, AcceptsAnyRotationOrReflection) {
  const Tour a({9, 10, 3, 8, 6, 2, 5, 7, 4, 1});
  const Tour b({6, 10, 2, 5, 1, 9, 8, 4, 7, 3});
  EXPECT_TRUE(pedigree_adjacent(a, b).adjacent);
}

TEST(Adjacency, InputErrors) {
  const Tour t({1, 4, 2, 3});
  EXPECT_THROW(pedigree_adjacent(t, t), ValidationError);
  EXPECT_THROW(pedigree_adjacent(t, Tour({1, 2, 3, 5, 4})), ValidationError);
  EXPECT_THROW(pedigree_adjacent(Tour({1, 2, 3}), Tour({1, 3, 2})), ValidationError);
}

TEST(Adjacency, FourNodeToursAreAllMutuallyAdjacent) {
  const std::vector<Tour> tours{Tour({1, 4, 2, 3}), Tour({1, 2, 4, 3}), Tour({1, 2, 3, 4})};
  for (std::size_t i = 0; i < tours.size(); ++i)
    for (std::size_t j = 0; j < tours.size(); ++j)
      if (i != j) EXPECT_TRUE(pedigree_adjacent(tours[i], tours[j]).adjacent);
}

TEST(Adjacency, SymmetricAndMatchesDirectRuleTranscription) {
  Rng rng = make_rng(301, 0);
  int adjacent = 0, trials = 0;
  for (int i = 0; i < 10000; ++i) {
    const Node n = 4 + static_cast<Node>(uniform_below(rng, 30));
    const auto a = sample_uniform_history(rng, n);
    const auto b = sample_uniform_history(rng, n);
    if (a == b) continue;
    ++trials;
    const bool forward = pedigree_adjacent(a, b).adjacent;
    ASSERT_EQ(forward, pedigree_adjacent(b, a).adjacent);
    ASSERT_EQ(forward, naive_adjacent(a, b));
    adjacent += forward;
  }
  EXPECT_GT(adjacent, 0);
  EXPECT_LT(adjacent, trials);
}

TEST(Adjacency, TourAndHistoryFormsAgree) {
  Rng rng = make_rng(302, 0);
  for (int i = 0; i < 500; ++i) {
    const Node n = 5 + static_cast<Node>(uniform_below(rng, 20));
    const auto a = sample_uniform_history(rng, n);
    const auto b = sample_uniform_history(rng, n);
    if (a == b) continue;
    EXPECT_EQ(pedigree_adjacent(a, b).adjacent, pedigree_adjacent(replay_history(a, n), replay_history(b, n)).adjacent);
  }
}

}  // namespace
}  // namespace pedigree
