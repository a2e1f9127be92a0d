#ifndef PEDIGREE_EXPERIMENTS_HPP
#define PEDIGREE_EXPERIMENTS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pedigree/game.hpp"
#include "pedigree/rational.hpp"

namespace pedigree {

/// Mean of a per-trial quantity with its standard error (sample standard
/// deviation over sqrt(trials)).
struct EstimateReport {
  std::string quantity;
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t trials = 0;
  Node horizon = 0;
  std::uint64_t seed = 0;

  /// From exact integer sums, so the result does not depend on summation order.
  static EstimateReport from_sums(std::string quantity, std::int64_t sum, std::int64_t sum_sq,
                                  std::uint64_t trials, Node horizon, std::uint64_t seed);
};

/// 4 / ((n-1)(n-2)), the probability that node n is created isolated.
Rational isolated_probability_formula(Node n);

/// Exact P(I_n) for a fixed Alice history, by enumerating all (n-1)!/2 Bob
/// histories through n. Supports 4 <= n <= 9.
Rational exact_isolated_probability(const InsertionHistory& alice, Node n);

/// Y = number of isolated-vertex creations over nodes 4..horizon, per trial.
EstimateReport estimate_expected_isolations(const AliceStrategy& strategy, Node horizon,
                                            std::uint64_t trials, std::uint64_t seed);

/// Fraction of trials whose pedigree graph G_n has at most one component.
EstimateReport connectivity_frequency(const AliceStrategy& strategy, Node n, std::uint64_t trials,
                                      std::uint64_t seed);

struct CommonEdgeReport {
  EstimateReport mean_common;       // S_n
  EstimateReport exceeds_log;       // indicator S_n > ln n
  double expected_common = 0.0;     // 2n / (n-1)
  double markov_bound = 0.0;        // 3 / ln n
};

CommonEdgeReport common_edge_statistics(const AliceStrategy& strategy, Node n, std::uint64_t trials,
                                        std::uint64_t seed);

/// Alice's move mix over the window of nodes n0+1..2*n0.
struct DMoveReport {
  EstimateReport d_moves;
  EstimateReport any_t_decrease;   // indicator: T drops at least once in the window
  double fraction_at_least_third = 0.0;  // trials with d_moves >= n0 / 3
  int min_d_moves = 0;
  int max_d_moves = 0;
  bool partition_holds = true;     // c-moves + d-moves == n0 in every trial
  std::map<int, std::uint64_t> histogram;
};

DMoveReport dmove_trajectory_stats(const AliceStrategy& strategy, Node n0, std::uint64_t trials,
                                   std::uint64_t seed);

/// Degree census of the Pedigree-polytope graph on all (n-1)!/2 tours.
struct SkeletonReport {
  Node n = 0;
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  int min_degree = 0;
  int max_degree = 0;
  std::map<int, std::uint64_t> degree_histogram;
  bool is_complete = false;
  bool is_regular = false;
  bool symmetric = true;
  double density = 0.0;
  std::vector<Tour> tours;
  std::vector<int> degrees;
};

/// All canonical tours on [n] in lexicographic order.
std::vector<Tour> enumerate_tours(Node n);

/// Pairwise adjacency over all tours. n > 8 is refused unless allow_large.
SkeletonReport enumerate_skeleton(Node n, bool allow_large = false);

/// Conformance of exact one-step outcome counts with the transition table,
/// over states reached by random play.
struct TransitionTableReport {
  std::uint64_t states = 0;
  std::uint64_t c_move_states = 0;
  std::uint64_t d_move_states = 0;
  std::uint64_t violations = 0;
  std::map<std::string, std::uint64_t> violations_by_rule;
  std::vector<std::string> first_violations;  // at most 20
};

struct TableViolation {
  std::string rule;  // e.g. "d:(0,0)<=R-T+1"
  std::string message;
};

TransitionTableReport check_transition_table(std::uint64_t states, std::uint64_t seed, Node n_min = 5,
                                             Node n_max = 200);

/// Every table constraint that `outcomes` breaks; empty if none.
std::vector<TableViolation> transition_table_violations(const GameState& state, const CycleEdge& alice_edge,
                                                     const std::vector<BobOutcome>& outcomes);

/// Draws a reachable state for table checks: random play to a uniform time
/// in [n_min, n_max], alternating strategies by index, plus an Alice edge
/// that is common with probability 1/2 when common edges exist.
std::pair<GameState, CycleEdge> sample_reachable_state(std::uint64_t seed, std::uint64_t index, Node n_min,
                                                       Node n_max);

/// Sampled one-step law against the exact outcome counts: for each sampled
/// state, `draws` Bob moves are simulated and a chi-square statistic over the
/// (dS, dT) cells is computed.
struct TransitionLawReport {
  std::uint64_t states = 0;
  std::uint64_t draws_per_state = 0;
  double min_p_value = 1.0;
  std::uint64_t rejections = 0;  // states with p < alpha
  double alpha = 0.0;
};

TransitionLawReport check_transition_law(std::uint64_t states, std::uint64_t draws, std::uint64_t seed,
                                         double alpha = 1e-3);

}  // namespace pedigree

#endif  // PEDIGREE_EXPERIMENTS_HPP
