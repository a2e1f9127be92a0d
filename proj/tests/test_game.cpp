#include <gtest/gtest.h>

#include "pedigree/error.hpp"
#include "pedigree/experiments.hpp"
#include "pedigree/game.hpp"
#include "test_support.hpp"

namespace pedigree {
namespace {

using Cell = std::pair<int, int>;  // (dS, dT)

GameState state_from(const InsertionHistory& a, const InsertionHistory& b) {
  return testing::play_scripted(a, b, a.length());
}

GameState same_four() {
  const InsertionHistory h(std::vector<CycleEdge>{{1, 2}});
  return state_from(h, h);
}

std::map<Cell, int> tally(const std::vector<BobOutcome>& outcomes) {
  std::map<Cell, int> out;
  for (const auto& o : outcomes) ++out[{o.delta_s, o.delta_t}];
  return out;
}

int at(const std::map<Cell, int>& cells, int ds, int dt) {
  const auto it = cells.find({ds, dt});
  return it == cells.end() ? 0 : it->second;
}

std::vector<test::Edge> history_of(const GrowingCycle& c) {
  std::vector<test::Edge> out;
  for (Node k = 4; k <= c.size(); ++k) out.push_back(test::make_edge(c.nu_plus(k), c.nu_minus(k)));
  return out;
}

struct NaiveCounts {
  int s = 0;
  int t = 0;
};

NaiveCounts naive_counts(const std::vector<test::Edge>& nu_a, const std::vector<test::Edge>& nu_b, int n) {
  const auto ea = test::naive_edges(test::naive_replay(nu_a, n));
  const auto eb = test::naive_edges(test::naive_replay(nu_b, n));
  NaiveCounts out;
  for (const auto& e : ea) out.s += static_cast<int>(eb.count(e));
  const auto g = test::naive_graph(nu_a, nu_b, n);
  std::vector<test::Edge> edges;
  for (const auto& [lo, hi, type] : g.edges) edges.emplace_back(lo, hi);
  out.t = test::count_components(g.vertices, edges);
  return out;
}

// Exact outcome list computed from plain edge lists, without GameState.
std::vector<BobOutcome> naive_outcomes(const GameState& state, const CycleEdge& alice_edge) {
  const int n = state.time();
  auto nu_a = history_of(state.alice()), nu_b = history_of(state.bob());
  const auto before = naive_counts(nu_a, nu_b, n);
  nu_a.push_back({alice_edge.lo(), alice_edge.hi()});
  std::vector<BobOutcome> out;
  for (const auto& [lo, hi] : test::naive_edges(test::naive_replay(nu_b, n))) {
    auto next_b = nu_b;
    next_b.push_back({lo, hi});
    const auto after = naive_counts(nu_a, next_b, n + 1);
    out.push_back({CycleEdge(lo, hi), after.s - before.s, after.t - before.t});
  }
  return out;
}

TEST(ClassifyMove, Examples) {
  const auto s4 = same_four();
  EXPECT_EQ(classify_move(s4, {1, 4}), MoveClass::C_MOVE);
  EXPECT_THROW(classify_move(s4, {1, 2}), ValidationError);

  const auto s9 = testing::play_scripted(test::alice_example(), test::bob_example(), 9);
  EXPECT_EQ(classify_move(s9, {3, 9}), MoveClass::D_MOVE);
  for (const auto& e : s9.alice().tour().edges())
    EXPECT_EQ(classify_move(s9, e), s9.bob().has_edge(e) ? MoveClass::C_MOVE : MoveClass::D_MOVE);
}

TEST(ClassifyMove, NoCommonEdgesMeansDMove) {
  Rng rng = make_rng(401, 0);
  int checked = 0;
  UniformRandomAlice alice;
  play(alice, rng, 60, [&](const GameState& s, const StepRecord&) {
    if (s.common_count() != 0) return;
    for (const auto& e : s.alice().tour().edges()) EXPECT_EQ(classify_move(s, e), MoveClass::D_MOVE);
    ++checked;
  });
  SUCCEED() << checked;
}

TEST(ApplyStep, FromIdenticalFourCycles) {
  const auto s4 = same_four();
  ASSERT_EQ(s4.common_count(), 4);
  ASSERT_EQ(s4.component_count(), 0);

  auto [s5, r1] = apply_step(s4, {1, 4}, {1, 4});
  EXPECT_EQ(r1.delta_s, 1);
  EXPECT_EQ(r1.delta_t, 0);
  EXPECT_EQ(s5.common_count(), 5);
  EXPECT_TRUE(s5.graph().vertices().empty());

  auto [s5b, r2] = apply_step(s4, {1, 4}, {2, 3});
  EXPECT_EQ(r2.delta_s, -2);
  EXPECT_EQ(r2.delta_t, 1);
  EXPECT_TRUE(r2.isolated_created);
  EXPECT_EQ(r2.s_star, 1);
  EXPECT_EQ(r2.r, 0);
  EXPECT_EQ(s5b.graph().vertices(), std::vector<Node>{5});
  EXPECT_TRUE(s5b.graph().edges().empty());

  auto [s5c, r3] = apply_step(s4, {1, 4}, {4, 2});
  EXPECT_EQ(r3.delta_s, -1);
  EXPECT_EQ(r3.delta_t, 1);
  EXPECT_EQ(r3.move_class, MoveClass::C_MOVE);
  EXPECT_EQ(r3.node, 5);
}

TEST(ApplyStep, RejectsNonEdges) {
  const auto s4 = same_four();
  EXPECT_THROW(apply_step(s4, {1, 2}, {1, 4}), ValidationError);
  EXPECT_THROW(apply_step(s4, {1, 4}, {1, 2}), ValidationError);
}

TEST(BobOutcomes, IdenticalFourCycles) {
  const auto s4 = same_four();
  const auto outcomes = bob_outcome_distribution(s4, {1, 4});
  ASSERT_EQ(outcomes.size(), 4u);
  EXPECT_EQ(tally(outcomes), (std::map<Cell, int>{{{1, 0}, 1}, {{-1, 1}, 2}, {{-2, 1}, 1}}));
}

TEST(BobOutcomes, MatchPlainEdgeListRecomputation) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    const auto [state, alice_edge] = sample_reachable_state(402, i, 5, 40);
    const auto got = bob_outcome_distribution(state, alice_edge);
    const auto want = naive_outcomes(state, alice_edge);
    ASSERT_EQ(got.size(), want.size());
    std::map<CycleEdge, Cell> by_edge;
    for (const auto& o : want) by_edge[o.bob_edge] = {o.delta_s, o.delta_t};
    for (const auto& o : got) {
      ASSERT_TRUE(by_edge.count(o.bob_edge));
      ASSERT_EQ(by_edge[o.bob_edge], (Cell{o.delta_s, o.delta_t})) << "state " << i << " bob " << o.bob_edge.str();
    }
  }
}

TEST(TransitionTable, CMoveCellsAreExact) {
  int c_states = 0;
  for (std::uint64_t i = 0; i < 3000; ++i) {
    const auto [state, alice_edge] = sample_reachable_state(403, i, 5, 200);
    if (classify_move(state, alice_edge) != MoveClass::C_MOVE) continue;
    ++c_states;
    const int s_star = state.common_disjoint_count(alice_edge);
    const int r = state.bob_only_disjoint_count(alice_edge);
    const auto cells = tally(bob_outcome_distribution(state, alice_edge));
    ASSERT_EQ(at(cells, 1, 0), 1);
    ASSERT_EQ(at(cells, -2, 1), s_star);
    ASSERT_EQ(at(cells, -1, 0), r);
    ASSERT_LE(at(cells, -1, 1), 2);
    ASSERT_LE(at(cells, 0, 0), 2);
    int rest = 0;
    for (const auto& [cell, count] : cells)
      if (cell != Cell{1, 0} && cell != Cell{-2, 1} && cell != Cell{-1, 0} && cell != Cell{-1, 1} && cell != Cell{0, 0})
        rest += count;
    ASSERT_EQ(rest, 0);
  }
  EXPECT_GT(c_states, 500);
}

TEST(TransitionTable, DMoveCellsOtherThanNoChange) {
  int d_states = 0;
  for (std::uint64_t i = 0; i < 3000; ++i) {
    const auto [state, alice_edge] = sample_reachable_state(404, i, 5, 200);
    if (classify_move(state, alice_edge) != MoveClass::D_MOVE) continue;
    ++d_states;
    const int s_star = state.common_disjoint_count(alice_edge);
    const auto outcomes = bob_outcome_distribution(state, alice_edge);
    const auto cells = tally(outcomes);
    ASSERT_EQ(at(cells, -1, 0), s_star);
    ASSERT_LE(at(cells, 1, 0), 4);
    int t_down = 0;
    for (const auto& o : outcomes) {
      ASSERT_NE(o.delta_t, 1);
      ASSERT_NE(o.delta_s, -2);
      t_down += o.delta_t == -1;
    }
    ASSERT_GE(t_down, state.component_count() - 1);
  }
  EXPECT_GT(d_states, 500);
}

TEST(TransitionTable, DMoveNoChangeCellCanExceedItsTableBound) {
  // Three Bob moves leave (S, T) unchanged while R - T + 1 = 1.
  const auto a = decode_tour(Tour({1, 4, 2, 3, 5, 6}));
  const auto b = decode_tour(Tour({1, 6, 2, 5, 3, 4}));
  const auto state = state_from(a, b);
  const CycleEdge alice_edge(5, 6);
  ASSERT_EQ(classify_move(state, alice_edge), MoveClass::D_MOVE);
  EXPECT_EQ(state.common_disjoint_count(alice_edge), 1);
  EXPECT_EQ(state.bob_only_disjoint_count(alice_edge), 1);
  EXPECT_EQ(state.component_count(), 1);
  const auto cells = tally(bob_outcome_distribution(state, alice_edge));
  EXPECT_EQ(at(cells, 0, 0), 3);
  const auto naive = tally(naive_outcomes(state, alice_edge));
  EXPECT_EQ(at(naive, 0, 0), 3);
  const auto violations = transition_table_violations(state, alice_edge, bob_outcome_distribution(state, alice_edge));
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].rule, "d:(0,0)<=R-T+1");
}

TEST(Game, ScriptedPlayReproducesWorkedExampleGraph) {
  std::vector<StepRecord> records;
  const auto state = testing::play_scripted(test::alice_example(), test::bob_example(), 10, &records);
  EXPECT_EQ(state.graph().vertices(), (std::vector<Node>{4, 5, 7, 8, 9, 10}));
  EXPECT_EQ(state.graph().edges(), build(test::alice_example(), test::bob_example(), 10).edges());
  EXPECT_EQ(state.component_count(), 1);
  ASSERT_EQ(records.size(), 7u);
  EXPECT_TRUE(records[8 - 4].isolated_created);
  EXPECT_EQ(records[8 - 4].delta_t, 1);
  EXPECT_EQ(records[9 - 4].delta_t, -1);
  EXPECT_EQ(state.alice().tour().str(), "1 4 7 5 2 6 8 3 10 9");
  EXPECT_EQ(state.bob().tour().str(), "1 5 2 10 6 3 7 4 8 9");
}

TEST(Game, SameSeedSameRecords) {
  GreedyCommonAlice greedy;
  UniformRandomAlice uniform;
  for (const AliceStrategy* s : {static_cast<const AliceStrategy*>(&greedy), static_cast<const AliceStrategy*>(&uniform)}) {
    Rng r1 = make_rng(405, 3), r2 = make_rng(405, 3);
    EXPECT_EQ(run_game(*s, r1, 150), run_game(*s, r2, 150));
  }
}

TEST(Game, RunGameCoversRequestedRounds) {
  UniformRandomAlice alice;
  Rng rng = make_rng(406, 0);
  const auto records = run_game(alice, rng, 20);
  ASSERT_EQ(records.size(), 17u);
  EXPECT_EQ(records.front().node, 4);
  EXPECT_EQ(records.back().node, 20);
  EXPECT_THROW(run_game(alice, rng, 3), ValidationError);
}

class BadAlice final : public AliceStrategy {
 public:
  CycleEdge choose(const GameState&, Rng&) const override { return {1, 2}; }
  std::string name() const override { return "bad"; }
};

TEST(Game, NonEdgeFromStrategyAborts) {
  BadAlice bad;
  Rng rng = make_rng(407, 0);
  try {
    run_game(bad, rng, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("bad"), std::string::npos);
  }
}

TEST(Game, GreedyPrefersSmallestCommonEdge) {
  const auto s4 = same_four();
  Rng rng = make_rng(0, 0);
  EXPECT_EQ(GreedyCommonAlice().choose(s4, rng), CycleEdge(1, 3));
  const auto s10 = testing::play_scripted(test::alice_example(), test::bob_example(), 10);
  ASSERT_EQ(s10.common_edges(), (std::vector<CycleEdge>{{1, 9}, {2, 5}, {4, 7}}));
  EXPECT_EQ(GreedyCommonAlice().choose(s10, rng), CycleEdge(1, 9));
  ScriptedAlice scripted(test::alice_example());
  EXPECT_EQ(scripted.choose(testing::play_scripted(test::alice_example(), test::bob_example(), 6), rng), CycleEdge(4, 5));
}

TEST(Game, RunningInvariantsAgainstIndependentChecks) {
  GreedyCommonAlice greedy;
  UniformRandomAlice uniform;
  for (int trial = 0; trial < 200; ++trial) {
    const AliceStrategy& s = trial % 2 ? static_cast<const AliceStrategy&>(greedy) : uniform;
    Rng rng = make_rng(408, static_cast<std::uint64_t>(trial));
    int step = 0;
    play(s, rng, 120, [&](const GameState& state, const StepRecord& r) {
      ASSERT_GE(r.delta_s, -2);
      ASSERT_LE(r.delta_s, 1);
      ASSERT_GE(r.delta_t, -1);
      ASSERT_LE(r.delta_t, 1);
      if (r.delta_t == 1) ASSERT_TRUE(r.isolated_created);
      ASSERT_EQ(r.s, state.common_count());
      ASSERT_EQ(r.t, state.component_count());
      if (++step % 32 == 0 || state.time() == 120) {
        ASSERT_EQ(state.recompute_common_edges(), state.common_edges());
        const auto ha = InsertionHistory::from_cycle(state.alice());
        const auto hb = InsertionHistory::from_cycle(state.bob());
        ASSERT_EQ(r.isolated_created, isolated_oracle(ha, hb, state.time()));
      }
    });
  }
}

TEST(Game, IsolatedFlagMatchesOracleEveryStep) {
  UniformRandomAlice alice;
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng = make_rng(409, static_cast<std::uint64_t>(trial));
    std::vector<CycleEdge> a_edges, b_edges;
    play(alice, rng, 60, [&](const GameState&, const StepRecord& r) {
      a_edges.push_back(r.alice_edge);
      b_edges.push_back(r.bob_edge);
      const InsertionHistory ha(a_edges), hb(b_edges);
      ASSERT_EQ(r.isolated_created, isolated_oracle(ha, hb, r.node));
    });
  }
}

TEST(Game, SStarAndRMatchDefinitions) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    const auto [state, e] = sample_reachable_state(410, i, 5, 80);
    int s_star = 0, r = 0;
    for (const auto& be : state.bob().tour().edges()) {
      if (be.touches(e)) continue;
      (state.alice().has_edge(be) ? s_star : r) += 1;
    }
    ASSERT_EQ(state.common_disjoint_count(e), s_star);
    ASSERT_EQ(state.bob_only_disjoint_count(e), r);
  }
}

TEST(Game, EveryComponentCanBeExtended) {
  // Whatever Alice plays, some Bob move creates n + 1 adjacent to the newest
  // vertex of each component.
  int components_checked = 0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const auto [state, unused] = sample_reachable_state(411, i, 5, 60);
    const auto comps = state.graph().components();
    const auto alice_edges = state.alice().tour().edges();
    const auto bob_edges = state.bob().tour().edges();
    for (const auto& comp : comps) {
      const Node k = comp.back();
      for (const auto& ae : alice_edges) {
        bool some = false;
        for (const auto& be : bob_edges) {
          const auto out = state.preview(ae, be);
          for (const auto& inc : out.incident) some |= out.vertex && inc.other == k;
          if (some) break;
        }
        ASSERT_TRUE(some) << "state " << i << " component max " << k << " alice " << ae.str();
      }
      ++components_checked;
    }
  }
  EXPECT_GT(components_checked, 5000);
}

}  // namespace
}  // namespace pedigree
