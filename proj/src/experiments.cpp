#include "pedigree/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include <boost/math/distributions/chi_squared.hpp>

#include "pedigree/adjacency.hpp"
#include "pedigree/parallel.hpp"

namespace pedigree {

EstimateReport EstimateReport::from_sums(std::string quantity, std::int64_t sum, std::int64_t sum_sq,
                                         std::uint64_t trials, Node horizon, std::uint64_t seed) {
  EstimateReport r;
  r.quantity = std::move(quantity);
  r.trials = trials;
  r.horizon = horizon;
  r.seed = seed;
  if (trials == 0) return r;
  const auto t = static_cast<double>(trials);
  r.estimate = static_cast<double>(sum) / t;
  if (trials > 1) {
    // Centered sum of squares from exact integers: (t*sum_sq - sum^2) / t.
    const long double centered =
        (static_cast<long double>(trials) * sum_sq - static_cast<long double>(sum) * sum) / t;
    const double variance = static_cast<double>(std::max<long double>(0, centered)) / (t - 1);
    r.standard_error = std::sqrt(variance / t);
  }
  return r;
}

Rational isolated_probability_formula(Node n) { return Rational(4, std::int64_t{n - 1} * (n - 2)); }

// ---------------------------------------------------------------------------
// Exact enumeration

namespace {

void count_isolations(const InsertionHistory& alice, Node n, const GrowingCycle& bob, std::int64_t& isolated,
                      std::int64_t& total) {
  const Node next = bob.size() + 1;
  if (next == n) {
    const CycleEdge nu_a = alice.nu(n);
    for (Node tail = 1; tail <= bob.size(); ++tail) {
      const CycleEdge nu_b = bob.edge_from(tail);
      ++total;
      if (nu_a != nu_b && rule_edges(nu_a, nu_b, n, alice.cycle(), bob).empty()) ++isolated;
    }
    return;
  }
  for (Node tail = 1; tail <= bob.size(); ++tail) {
    GrowingCycle child = bob;
    child.insert(bob.edge_from(tail));
    count_isolations(alice, n, child, isolated, total);
  }
}

}  // namespace

Rational exact_isolated_probability(const InsertionHistory& alice, Node n) {
  if (n < 4 || n > 9)
    throw ValidationError("exact enumeration supports 4 <= n <= 9, got " + std::to_string(n), n);
  if (alice.length() < n)
    throw ValidationError("Alice history ends before node " + std::to_string(n), n);
  std::int64_t isolated = 0;
  std::int64_t total = 0;
  count_isolations(alice, n, GrowingCycle(n), isolated, total);
  return Rational(isolated, total);
}

// ---------------------------------------------------------------------------
// Monte Carlo

namespace {

struct Sums {
  std::int64_t sum = 0;
  std::int64_t sum_sq = 0;
  void add(std::int64_t x) {
    sum += x;
    sum_sq += x * x;
  }
  Sums& operator+=(const Sums& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
    return *this;
  }
};

// Runs `trial(rng)` for every trial index with its own derived stream and
// sums the integer results.
template <class Trial>
Sums sum_over_trials(std::uint64_t trials, std::uint64_t seed, Trial&& trial) {
  return parallel_reduce(
      trials, Sums{},
      [&](std::size_t begin, std::size_t end) {
        Sums s;
        for (auto i = begin; i < end; ++i) {
          Rng rng = make_rng(seed, i);
          s.add(trial(rng));
        }
        return s;
      },
      [](Sums a, const Sums& b) { return a += b; });
}

}  // namespace

EstimateReport estimate_expected_isolations(const AliceStrategy& strategy, Node horizon, std::uint64_t trials,
                                            std::uint64_t seed) {
  if (horizon < 4) throw ValidationError("horizon must be at least 4", horizon);
  const auto s = sum_over_trials(trials, seed, [&](Rng& rng) {
    std::int64_t y = 0;
    play(strategy, rng, horizon, [&](const GameState&, const StepRecord& rec) { y += rec.isolated_created; });
    return y;
  });
  return EstimateReport::from_sums("expected_isolations", s.sum, s.sum_sq, trials, horizon, seed);
}

EstimateReport connectivity_frequency(const AliceStrategy& strategy, Node n, std::uint64_t trials,
                                      std::uint64_t seed) {
  if (n < 4) throw ValidationError("n must be at least 4", n);
  const auto s = sum_over_trials(trials, seed, [&](Rng& rng) {
    bool connected = true;
    play(strategy, rng, n, [&](const GameState& st, const StepRecord&) {
      if (st.time() == n) connected = st.graph().is_connected();
    });
    return std::int64_t{connected};
  });
  return EstimateReport::from_sums("connected_fraction", s.sum, s.sum_sq, trials, n, seed);
}

CommonEdgeReport common_edge_statistics(const AliceStrategy& strategy, Node n, std::uint64_t trials,
                                        std::uint64_t seed) {
  if (n < 4) throw ValidationError("n must be at least 4", n);
  struct Pair {
    Sums common;
    Sums exceeds;
  };
  const double log_n = std::log(static_cast<double>(n));
  const auto total = parallel_reduce(
      trials, Pair{},
      [&](std::size_t begin, std::size_t end) {
        Pair p;
        for (auto i = begin; i < end; ++i) {
          Rng rng = make_rng(seed, i);
          std::int64_t s_final = 0;
          play(strategy, rng, n, [&](const GameState& st, const StepRecord&) { s_final = st.common_count(); });
          p.common.add(s_final);
          p.exceeds.add(static_cast<double>(s_final) > log_n);
        }
        return p;
      },
      [](Pair a, const Pair& b) {
        a.common += b.common;
        a.exceeds += b.exceeds;
        return a;
      });

  CommonEdgeReport r;
  r.mean_common = EstimateReport::from_sums("mean_common_edges", total.common.sum, total.common.sum_sq, trials, n, seed);
  r.exceeds_log = EstimateReport::from_sums("p_common_exceeds_log_n", total.exceeds.sum, total.exceeds.sum_sq,
                                            trials, n, seed);
  r.expected_common = 2.0 * n / (n - 1.0);
  r.markov_bound = 3.0 / log_n;
  return r;
}

DMoveReport dmove_trajectory_stats(const AliceStrategy& strategy, Node n0, std::uint64_t trials,
                                   std::uint64_t seed) {
  if (n0 < 8) throw ValidationError("window start must be at least 8", n0);
  struct Partial {
    Sums d;
    Sums decrease;
    std::uint64_t at_least_third = 0;
    int min_d = std::numeric_limits<int>::max();
    int max_d = 0;
    bool partition = true;
    std::map<int, std::uint64_t> histogram;
  };
  const auto total = parallel_reduce(
      trials, Partial{},
      [&](std::size_t begin, std::size_t end) {
        Partial p;
        for (auto i = begin; i < end; ++i) {
          Rng rng = make_rng(seed, i);
          int d = 0;
          int c = 0;
          bool decreased = false;
          play(strategy, rng, 2 * n0, [&](const GameState&, const StepRecord& rec) {
            if (rec.node <= n0) return;
            (rec.move_class == MoveClass::D_MOVE ? d : c) += 1;
            decreased |= rec.delta_t < 0;
          });
          p.d.add(d);
          p.decrease.add(decreased);
          p.at_least_third += 3 * d >= n0;
          p.min_d = std::min(p.min_d, d);
          p.max_d = std::max(p.max_d, d);
          p.partition &= (c + d == n0);
          ++p.histogram[d];
        }
        return p;
      },
      [](Partial a, const Partial& b) {
        a.d += b.d;
        a.decrease += b.decrease;
        a.at_least_third += b.at_least_third;
        a.min_d = std::min(a.min_d, b.min_d);
        a.max_d = std::max(a.max_d, b.max_d);
        a.partition = a.partition && b.partition;
        for (const auto& [k, v] : b.histogram) a.histogram[k] += v;
        return a;
      });

  DMoveReport r;
  r.d_moves = EstimateReport::from_sums("d_moves_in_window", total.d.sum, total.d.sum_sq, trials, 2 * n0, seed);
  r.any_t_decrease = EstimateReport::from_sums("any_t_decrease_in_window", total.decrease.sum,
                                               total.decrease.sum_sq, trials, 2 * n0, seed);
  r.fraction_at_least_third = trials ? static_cast<double>(total.at_least_third) / static_cast<double>(trials) : 0.0;
  r.min_d_moves = trials ? total.min_d : 0;
  r.max_d_moves = total.max_d;
  r.partition_holds = total.partition;
  r.histogram = total.histogram;
  return r;
}

// ---------------------------------------------------------------------------
// Skeleton census

std::vector<Tour> enumerate_tours(Node n) {
  if (n < 3) throw ValidationError("tours need at least 3 nodes", n);
  std::vector<Node> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 2);
  std::vector<Tour> out;
  do {
    // Positive orientation: 2 precedes 3 after the leading 1.
    if (std::find(rest.begin(), rest.end(), 2) > std::find(rest.begin(), rest.end(), 3)) continue;
    std::vector<Node> order{1};
    order.insert(order.end(), rest.begin(), rest.end());
    out.emplace_back(std::move(order));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

SkeletonReport enumerate_skeleton(Node n, bool allow_large) {
  if (n < 4) throw ValidationError("skeleton census needs n >= 4", n);
  if (n > 8 && !allow_large) throw ValidationError("n > 8 is refused without the override flag", n);

  SkeletonReport r;
  r.n = n;
  r.tours = enumerate_tours(n);
  const std::size_t v = r.tours.size();
  r.vertex_count = v;

  std::vector<InsertionHistory> histories;
  histories.reserve(v);
  for (const auto& t : r.tours) histories.push_back(decode_tour(t));

  // Row i holds adjacency of tour i to every other tour; rows are computed
  // independently so that symmetry is an actual check.
  std::vector<std::vector<std::uint8_t>> rows(v);
  parallel_reduce(
      v, 0,
      [&](std::size_t begin, std::size_t end) {
        for (auto i = begin; i < end; ++i) {
          rows[i].assign(v, 0);
          for (std::size_t j = 0; j < v; ++j) {
            if (i == j) continue;
            rows[i][j] = build(histories[i], histories[j], n).is_connected();
          }
        }
        return 0;
      },
      [](int a, int) { return a; });

  r.degrees.assign(v, 0);
  std::uint64_t ordered_pairs = 0;
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = 0; j < v; ++j) {
      if (rows[i][j] != rows[j][i]) r.symmetric = false;
      r.degrees[i] += rows[i][j];
    }
    ordered_pairs += static_cast<std::uint64_t>(r.degrees[i]);
    ++r.degree_histogram[r.degrees[i]];
  }
  r.edge_count = ordered_pairs / 2;
  r.min_degree = *std::min_element(r.degrees.begin(), r.degrees.end());
  r.max_degree = *std::max_element(r.degrees.begin(), r.degrees.end());
  r.is_regular = r.min_degree == r.max_degree;
  r.is_complete = r.min_degree == static_cast<int>(v) - 1;
  r.density = v > 1 ? 2.0 * static_cast<double>(r.edge_count) / (static_cast<double>(v) * (static_cast<double>(v) - 1)) : 0.0;
  return r;
}

// ---------------------------------------------------------------------------
// Transition table

namespace {

using Cell = std::pair<int, int>;  // (delta S, delta T)

std::string describe_state(const GameState& s, const CycleEdge& alice_edge, MoveClass m) {
  std::ostringstream os;
  os << "n=" << s.time() << " S=" << s.common_count() << " T=" << s.component_count()
     << " S*=" << s.common_disjoint_count(alice_edge) << " R=" << s.bob_only_disjoint_count(alice_edge)
     << " alice=" << alice_edge.str() << " " << to_string(m) << "-move";
  return os.str();
}

}  // namespace

std::vector<TableViolation> transition_table_violations(const GameState& state, const CycleEdge& alice_edge,
                                                     const std::vector<BobOutcome>& outcomes) {
  std::map<Cell, int> count;
  int t_decrease = 0;
  for (const auto& o : outcomes) {
    ++count[{o.delta_s, o.delta_t}];
    t_decrease += o.delta_t == -1;
  }
  const auto at = [&](int ds, int dt) {
    auto it = count.find({ds, dt});
    return it == count.end() ? 0 : it->second;
  };

  const MoveClass move = classify_move(state, alice_edge);
  const int s_star = state.common_disjoint_count(alice_edge);
  const int r = state.bob_only_disjoint_count(alice_edge);
  const int t = state.component_count();

  std::vector<TableViolation> bad;
  const char* prefix = move == MoveClass::C_MOVE ? "c:" : "d:";
  const auto require = [&](bool ok, const std::string& rule, const std::string& what) {
    if (!ok) bad.push_back({prefix + rule, describe_state(state, alice_edge, move) + ": " + what});
  };
  const auto only_cells = [&](std::initializer_list<Cell> allowed) {
    for (const auto& [cell, c] : count) {
      if (std::find(allowed.begin(), allowed.end(), cell) == allowed.end())
        require(false, "other cells empty",
                "unexpected cell (" + std::to_string(cell.first) + "," + std::to_string(cell.second) + ") x" +
                    std::to_string(c));
    }
  };

  if (move == MoveClass::C_MOVE) {
    require(at(+1, 0) == 1, "(+1,0)=1", "(+1,0) count " + std::to_string(at(+1, 0)) + " != 1");
    require(at(-2, +1) == s_star, "(-2,+1)=S*", "(-2,+1) count " + std::to_string(at(-2, +1)) + " != S*");
    require(at(-1, 0) == r, "(-1,0)=R", "(-1,0) count " + std::to_string(at(-1, 0)) + " != R");
    require(at(-1, +1) <= 2, "(-1,+1)<=2", "(-1,+1) count " + std::to_string(at(-1, +1)) + " > 2");
    require(at(0, 0) <= 2, "(0,0)<=2", "(0,0) count " + std::to_string(at(0, 0)) + " > 2");
    only_cells({{+1, 0}, {-2, +1}, {-1, 0}, {-1, +1}, {0, 0}});
  } else {
    require(at(-1, 0) == s_star, "(-1,0)=S*", "(-1,0) count " + std::to_string(at(-1, 0)) + " != S*");
    require(at(0, 0) <= r - t + 1, "(0,0)<=R-T+1", "(0,0) count " + std::to_string(at(0, 0)) + " > R-T+1");
    require(at(+1, 0) <= 4, "(+1,0)<=4", "(+1,0) count " + std::to_string(at(+1, 0)) + " > 4");
    require(t_decrease >= t - 1, "#(dT=-1)>=T-1", "#(dT=-1) " + std::to_string(t_decrease) + " < T-1");
    only_cells({{-1, 0}, {0, 0}, {+1, 0}, {0, -1}, {+1, -1}});
  }
  return bad;
}

std::pair<GameState, CycleEdge> sample_reachable_state(std::uint64_t seed, std::uint64_t index, Node n_min,
                                                       Node n_max) {
  static const UniformRandomAlice random_alice;
  static const GreedyCommonAlice greedy_alice;
  const AliceStrategy& strategy =
      index % 2 == 0 ? static_cast<const AliceStrategy&>(random_alice) : greedy_alice;

  Rng rng = make_rng(seed, index);
  const Node target = n_min + static_cast<Node>(uniform_below(rng, static_cast<std::uint64_t>(n_max - n_min + 1)));
  GameState state(target + 1);
  while (state.time() < target) {
    const CycleEdge a = strategy.choose(state, rng);
    state.apply(a, draw_bob_edge(state, rng));
  }

  CycleEdge alice_edge;
  const auto& common = state.common_edges();
  if (!common.empty() && (rng() & 1u)) {
    alice_edge = common[uniform_below(rng, common.size())];
  } else {
    alice_edge = state.alice().edge_from(static_cast<Node>(uniform_below(rng, static_cast<std::uint64_t>(state.time()))) + 1);
  }
  return {std::move(state), alice_edge};
}

TransitionTableReport check_transition_table(std::uint64_t states, std::uint64_t seed, Node n_min, Node n_max) {
  if (n_min < 4 || n_max < n_min) throw ValidationError("invalid state time range");
  return parallel_reduce(
      states, TransitionTableReport{},
      [&](std::size_t begin, std::size_t end) {
        TransitionTableReport p;
        for (auto i = begin; i < end; ++i) {
          auto [state, alice_edge] = sample_reachable_state(seed, i, n_min, n_max);
          const auto outcomes = bob_outcome_distribution(state, alice_edge);
          ++p.states;
          (classify_move(state, alice_edge) == MoveClass::C_MOVE ? p.c_move_states : p.d_move_states) += 1;
          const auto bad = transition_table_violations(state, alice_edge, outcomes);
          p.violations += bad.size();
          for (const auto& b : bad) {
            ++p.violations_by_rule[b.rule];
            if (p.first_violations.size() < 20) p.first_violations.push_back(b.message);
          }
        }
        return p;
      },
      [](TransitionTableReport a, const TransitionTableReport& b) {
        a.states += b.states;
        a.c_move_states += b.c_move_states;
        a.d_move_states += b.d_move_states;
        a.violations += b.violations;
        for (const auto& [rule, c] : b.violations_by_rule) a.violations_by_rule[rule] += c;
        for (const auto& v : b.first_violations)
          if (a.first_violations.size() < 20) a.first_violations.push_back(v);
        return a;
      });
}

TransitionLawReport check_transition_law(std::uint64_t states, std::uint64_t draws, std::uint64_t seed,
                                         double alpha) {
  TransitionLawReport r;
  r.states = states;
  r.draws_per_state = draws;
  r.alpha = alpha;
  for (std::uint64_t i = 0; i < states; ++i) {
    auto [state, alice_edge] = sample_reachable_state(seed, i, 5, 200);
    std::map<Cell, double> expected;
    for (const auto& o : bob_outcome_distribution(state, alice_edge))
      expected[{o.delta_s, o.delta_t}] += 1.0 / state.time();

    Rng rng = make_rng(seed ^ 0x5eedULL, i);
    std::map<Cell, std::uint64_t> observed;
    bool impossible = false;
    for (std::uint64_t d = 0; d < draws; ++d) {
      const auto o = state.preview(alice_edge, draw_bob_edge(state, rng));
      const Cell c{o.delta_s, o.delta_t};
      if (!expected.count(c)) impossible = true;
      ++observed[c];
    }

    double p_value = 0.0;
    if (!impossible) {
      double chi2 = 0.0;
      for (const auto& [cell, p] : expected) {
        const double e = p * static_cast<double>(draws);
        const double o = static_cast<double>(observed[cell]);
        chi2 += (o - e) * (o - e) / e;
      }
      const auto dof = expected.size() - 1;
      p_value = dof == 0 ? 1.0 : boost::math::cdf(boost::math::complement(boost::math::chi_squared(static_cast<double>(dof)), chi2));
    }
    r.min_p_value = std::min(r.min_p_value, p_value);
    r.rejections += p_value < alpha;
  }
  return r;
}

}  // namespace pedigree
