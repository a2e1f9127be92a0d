#include "pedigree/game.hpp"

#include <algorithm>

namespace pedigree {

std::string_view to_string(MoveClass m) { return m == MoveClass::C_MOVE ? "c" : "d"; }

GameState::GameState(Node capacity) : alice_(capacity), bob_(capacity), graph_(capacity) {
  common_ = {CycleEdge(1, 2), CycleEdge(1, 3), CycleEdge(2, 3)};
}

std::vector<CycleEdge> GameState::recompute_common_edges() const {
  std::vector<CycleEdge> out;
  for (const auto& e : alice_.edges())
    if (bob_.has_edge(e)) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Distinct edges of `c` incident on either end of `e`.
std::size_t edges_touching(const GrowingCycle& c, const CycleEdge& e, std::array<CycleEdge, 4>& out) {
  std::size_t count = 0;
  for (Node v : {e.lo(), e.hi()}) {
    for (Node w : {c.next(v), c.prev(v)}) {
      const CycleEdge candidate(v, w);
      if (std::find(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(count), candidate) ==
          out.begin() + static_cast<std::ptrdiff_t>(count))
        out[count++] = candidate;
    }
  }
  return count;
}

int shared_nodes(const CycleEdge& a, const CycleEdge& b) {
  return static_cast<int>(b.contains(a.lo())) + static_cast<int>(b.contains(a.hi()));
}

}  // namespace

int GameState::common_disjoint_count(const CycleEdge& alice_edge) const {
  std::array<CycleEdge, 4> near{};
  const auto count = edges_touching(alice_, alice_edge, near);
  int touching_common = 0;
  for (std::size_t i = 0; i < count; ++i) touching_common += bob_.has_edge(near[i]);
  return common_count() - touching_common;
}

int GameState::bob_only_disjoint_count(const CycleEdge& alice_edge) const {
  std::array<CycleEdge, 4> near{};
  const auto count = edges_touching(bob_, alice_edge, near);
  int touching_bob_only = 0;
  for (std::size_t i = 0; i < count; ++i) touching_bob_only += !alice_.has_edge(near[i]);
  return (time() - common_count()) - touching_bob_only;
}

StepOutcome GameState::preview(const CycleEdge& alice_edge, const CycleEdge& bob_edge) const {
  if (!alice_.has_edge(alice_edge))
    throw ValidationError(alice_edge.str() + " is not a cycle-edge of A_" + std::to_string(time()));
  if (!bob_.has_edge(bob_edge))
    throw ValidationError(bob_edge.str() + " is not a cycle-edge of B_" + std::to_string(time()));

  const Node n = time() + 1;
  StepOutcome out;
  out.vertex = alice_edge != bob_edge;
  if (out.vertex) out.incident = rule_edges(alice_edge, bob_edge, n, alice_, bob_);
  out.delta_t = graph_.component_delta(out.vertex, out.incident);
  out.isolated = out.vertex && out.incident.empty();

  // Only the two subdivided edges can leave E∩; only edges {n, x} with x
  // shared by both subdivided edges can join it.
  int removed = bob_.has_edge(alice_edge);
  if (bob_edge != alice_edge) removed += alice_.has_edge(bob_edge);
  out.delta_s = shared_nodes(alice_edge, bob_edge) - removed;
  return out;
}

StepRecord GameState::apply(const CycleEdge& alice_edge, const CycleEdge& bob_edge) {
  const StepOutcome outcome = preview(alice_edge, bob_edge);

  StepRecord rec;
  rec.move_class = bob_.has_edge(alice_edge) ? MoveClass::C_MOVE : MoveClass::D_MOVE;
  rec.alice_edge = alice_edge;
  rec.bob_edge = bob_edge;
  rec.s_star = common_disjoint_count(alice_edge);
  rec.r = bob_only_disjoint_count(alice_edge);

  const Node n = alice_.insert(alice_edge);
  bob_.insert(bob_edge);
  graph_.advance(outcome.vertex, outcome.incident);

  std::erase(common_, alice_edge);
  std::erase(common_, bob_edge);
  for (Node x : {alice_edge.lo(), alice_edge.hi()}) {
    if (bob_edge.contains(x)) {
      const CycleEdge e(x, n);
      common_.insert(std::upper_bound(common_.begin(), common_.end(), e), e);
    }
  }

  rec.node = n;
  rec.delta_s = outcome.delta_s;
  rec.delta_t = outcome.delta_t;
  rec.isolated_created = outcome.isolated;
  rec.s = common_count();
  rec.t = component_count();
  return rec;
}

MoveClass classify_move(const GameState& state, const CycleEdge& alice_edge) {
  if (!state.alice().has_edge(alice_edge))
    throw ValidationError(alice_edge.str() + " is not a cycle-edge of A_" + std::to_string(state.time()));
  return state.bob().has_edge(alice_edge) ? MoveClass::C_MOVE : MoveClass::D_MOVE;
}

std::pair<GameState, StepRecord> apply_step(GameState state, const CycleEdge& alice_edge,
                                            const CycleEdge& bob_edge) {
  StepRecord rec = state.apply(alice_edge, bob_edge);
  return {std::move(state), rec};
}

std::vector<BobOutcome> bob_outcome_distribution(const GameState& state, const CycleEdge& alice_edge) {
  std::vector<BobOutcome> out;
  out.reserve(static_cast<std::size_t>(state.time()));
  for (Node tail = 1; tail <= state.time(); ++tail) {
    const CycleEdge bob_edge = state.bob().edge_from(tail);
    const auto o = state.preview(alice_edge, bob_edge);
    out.push_back({bob_edge, o.delta_s, o.delta_t});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Strategies

CycleEdge UniformRandomAlice::choose(const GameState& state, Rng& rng) const {
  const auto tail = static_cast<Node>(uniform_below(rng, static_cast<std::uint64_t>(state.time()))) + 1;
  return state.alice().edge_from(tail);
}

CycleEdge GreedyCommonAlice::choose(const GameState& state, Rng& /*rng*/) const {
  if (!state.common_edges().empty()) return state.common_edges().front();
  const auto& a = state.alice();
  return CycleEdge(1, std::min(a.next(1), a.prev(1)));
}

CycleEdge ScriptedAlice::choose(const GameState& state, Rng& /*rng*/) const {
  const Node n = state.time() + 1;
  if (n > history_.length())
    throw Error("scripted history ends at " + std::to_string(history_.length()) +
                ", cannot choose for node " + std::to_string(n));
  return history_.nu(n);
}

CycleEdge draw_bob_edge(const GameState& state, Rng& rng) {
  const auto tail = static_cast<Node>(uniform_below(rng, static_cast<std::uint64_t>(state.time()))) + 1;
  return state.bob().edge_from(tail);
}

std::vector<StepRecord> run_game(const AliceStrategy& strategy, Rng& rng, Node n_max, Node n_start) {
  if (n_max < 4) throw ValidationError("game horizon must be at least 4", n_max);
  std::vector<StepRecord> records;
  records.reserve(static_cast<std::size_t>(std::max<Node>(0, n_max - n_start)));
  play(strategy, rng, n_max, [&](const GameState&, const StepRecord& rec) {
    if (rec.node > n_start) records.push_back(rec);
  });
  return records;
}

namespace testing {

GameState play_scripted(const InsertionHistory& alice, const InsertionHistory& bob, Node n,
                        std::vector<StepRecord>* records) {
  if (alice.length() < n || bob.length() < n)
    throw ValidationError("scripted histories end before " + std::to_string(n), n);
  GameState state(n);
  while (state.time() < n) {
    const Node next = state.time() + 1;
    const auto rec = state.apply(alice.nu(next), bob.nu(next));
    if (records) records->push_back(rec);
  }
  return state;
}

}  // namespace testing

}  // namespace pedigree
