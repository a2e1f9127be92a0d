#ifndef PEDIGREE_GAME_HPP
#define PEDIGREE_GAME_HPP

#include <memory>
#include <string>
#include <vector>

#include "pedigree/pedigree_graph.hpp"
#include "pedigree/rng.hpp"

namespace pedigree {

enum class MoveClass : std::uint8_t { C_MOVE, D_MOVE };

std::string_view to_string(MoveClass m);

/// Effect of one round, computed without touching the state.
struct StepOutcome {
  bool vertex = false;
  IncidentEdges incident;
  int delta_s = 0;
  int delta_t = 0;
  bool isolated = false;
};

/// Telemetry for one round. `node` is the node inserted this round; the
/// counts s_star and r are taken before the round, s and t after it.
struct StepRecord {
  Node node = 0;
  MoveClass move_class = MoveClass::D_MOVE;
  CycleEdge alice_edge;
  CycleEdge bob_edge;
  int delta_s = 0;
  int delta_t = 0;
  bool isolated_created = false;
  int s_star = 0;
  int r = 0;
  int s = 0;
  int t = 0;
  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

/// Both cycles at time n, the pedigree graph G_n, and the common cycle-edges
/// E(A_n) ∩ E(B_n), all maintained incrementally.
class GameState {
 public:
  explicit GameState(Node capacity = 3);

  Node time() const { return alice_.size(); }
  const GrowingCycle& alice() const { return alice_; }
  const GrowingCycle& bob() const { return bob_; }
  const PedigreeGraph& graph() const { return graph_; }

  /// Sorted by (lo, hi).
  const std::vector<CycleEdge>& common_edges() const { return common_; }
  int common_count() const { return static_cast<int>(common_.size()); }
  int component_count() const { return graph_.component_count(); }

  bool is_common(const CycleEdge& e) const { return alice_.has_edge(e) && bob_.has_edge(e); }

  /// E(A_n) ∩ E(B_n) by a full scan of A's edges.
  std::vector<CycleEdge> recompute_common_edges() const;

  /// S*: common edges sharing no node with `alice_edge`.
  int common_disjoint_count(const CycleEdge& alice_edge) const;
  /// R: Bob-only edges sharing no node with `alice_edge`.
  int bob_only_disjoint_count(const CycleEdge& alice_edge) const;

  /// Throws ValidationError unless both edges are current cycle-edges.
  StepOutcome preview(const CycleEdge& alice_edge, const CycleEdge& bob_edge) const;

  StepRecord apply(const CycleEdge& alice_edge, const CycleEdge& bob_edge);

 private:
  GrowingCycle alice_;
  GrowingCycle bob_;
  PedigreeGraph graph_;
  std::vector<CycleEdge> common_;
};

/// C_MOVE iff alice_edge is common. Throws if it is not an edge of A_n.
MoveClass classify_move(const GameState& state, const CycleEdge& alice_edge);

/// Value-returning form of GameState::apply.
std::pair<GameState, StepRecord> apply_step(GameState state, const CycleEdge& alice_edge,
                                            const CycleEdge& bob_edge);

struct BobOutcome {
  CycleEdge bob_edge;
  int delta_s = 0;
  int delta_t = 0;
};

/// One entry per cycle-edge of B_n; each has probability 1/n under a
/// uniform Bob.
std::vector<BobOutcome> bob_outcome_distribution(const GameState& state, const CycleEdge& alice_edge);

/// Decides Alice's insertion edge each round. Implementations must be
/// stateless across calls so one instance can serve many games at once.
class AliceStrategy {
 public:
  virtual ~AliceStrategy() = default;
  virtual CycleEdge choose(const GameState& state, Rng& rng) const = 0;
  virtual std::string name() const = 0;
};

/// Uniform over E(A_n).
class UniformRandomAlice final : public AliceStrategy {
 public:
  CycleEdge choose(const GameState& state, Rng& rng) const override;
  std::string name() const override { return "random"; }
};

/// Smallest common edge when one exists, else smallest edge of A_n, both in
/// (lo, hi) order.
class GreedyCommonAlice final : public AliceStrategy {
 public:
  CycleEdge choose(const GameState& state, Rng& rng) const override;
  std::string name() const override { return "greedy-common"; }
};

/// Replays a fixed insertion history.
class ScriptedAlice final : public AliceStrategy {
 public:
  explicit ScriptedAlice(InsertionHistory history) : history_(std::move(history)) {}
  CycleEdge choose(const GameState& state, Rng& rng) const override;
  std::string name() const override { return "scripted"; }
  const InsertionHistory& history() const { return history_; }

 private:
  InsertionHistory history_;
};

/// Bob's move: the edge leaving a uniformly drawn node in positive direction.
CycleEdge draw_bob_edge(const GameState& state, Rng& rng);

/// Plays rounds until time n_max, calling `observe(state, record)` after each.
template <class Observer>
void play(const AliceStrategy& strategy, Rng& rng, Node n_max, Observer&& observe) {
  GameState state(n_max);
  while (state.time() < n_max) {
    const CycleEdge alice_edge = strategy.choose(state, rng);
    if (!state.alice().has_edge(alice_edge))
      throw Error("strategy '" + strategy.name() + "' returned " + alice_edge.str() +
                  ", which is not a cycle-edge of A_" + std::to_string(state.time()));
    const CycleEdge bob_edge = draw_bob_edge(state, rng);
    const StepRecord record = state.apply(alice_edge, bob_edge);
    observe(state, record);
  }
}

/// Records of all rounds inserting nodes n_start+1..n_max.
std::vector<StepRecord> run_game(const AliceStrategy& strategy, Rng& rng, Node n_max, Node n_start = 3);

namespace testing {

/// Both sides scripted; reproduces a fixed pair of histories through n.
GameState play_scripted(const InsertionHistory& alice, const InsertionHistory& bob, Node n,
                        std::vector<StepRecord>* records = nullptr);

}  // namespace testing

}  // namespace pedigree

#endif  // PEDIGREE_GAME_HPP
