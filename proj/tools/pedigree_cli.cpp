// Command-line front end: adjacency tests, game simulation, validation suites
// and the small-n skeleton census.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "pedigree/adjacency.hpp"
#include "pedigree/experiments.hpp"
#include "pedigree/report_json.hpp"
#include "pedigree/text_format.hpp"

namespace {

using nlohmann::json;
using namespace pedigree;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "@path" reads the file, anything else is taken literally.
std::string input_text(const std::string& arg) { return !arg.empty() && arg[0] == '@' ? read_file(arg.substr(1)) : arg; }

InsertionHistory read_history_arg(const std::string& arg) {
  const std::string text = input_text(arg);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return history_from_json(json::parse(text));
  return parse_tour_or_history(text);
}

Tour read_tour_arg(const std::string& arg) {
  const auto h = read_history_arg(arg);
  return replay_history(h, h.length());
}

// Seed from the flag, or a fresh one that is echoed so the run can be repeated.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  std::random_device rd;
  const std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) | rd();
  std::cerr << "seed: " << seed << '\n';
  return seed;
}

std::unique_ptr<AliceStrategy> make_strategy(const std::string& spec) {
  if (spec == "random") return std::make_unique<UniformRandomAlice>();
  if (spec == "greedy-common") return std::make_unique<GreedyCommonAlice>();
  if (spec.rfind("scripted:", 0) == 0) return std::make_unique<ScriptedAlice>(read_history_arg("@" + spec.substr(9)));
  throw Error("unknown strategy '" + spec + "' (expected random, greedy-common or scripted:<file>)");
}

// Writes to `path` when given, else to stdout.
void emit(const json& j, const std::string& path, int indent = 2) {
  if (path.empty()) {
    std::cout << j.dump(indent) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(indent) << '\n';
}

// ---------------------------------------------------------------------------
// validate suites

std::vector<InsertionHistory> fixed_alice_histories(Node length) {
  std::vector<InsertionHistory> out;
  // The worked example's Alice cycle.
  out.push_back(InsertionHistory(std::vector<CycleEdge>{{1, 2}, {2, 4}, {2, 3}, {4, 5}, {3, 6}, {1, 3}, {3, 9}}));
  // Always subdivide the edge leaving node 1.
  GrowingCycle first_edge(length);
  while (first_edge.size() < length) first_edge.insert(first_edge.edge_from(1));
  out.push_back(InsertionHistory::from_cycle(first_edge));
  for (std::uint64_t s : {11u, 12u}) {
    Rng rng = make_rng(s, 0);
    out.push_back(sample_uniform_history(rng, length));
  }
  for (auto& h : out)
    if (h.length() > length) h = h.prefix(length);
  return out;
}

json lemma10_for(Node n) {
  const auto expected = isolated_probability_formula(n);
  std::optional<Rational> observed;
  bool same = true;
  for (const auto& h : fixed_alice_histories(std::max<Node>(n, 9))) {
    const auto p = exact_isolated_probability(h, n);
    if (observed && *observed != p) same = false;
    if (!observed) observed = p;
  }
  return {{"n", n},
          {"expected", expected.str()},
          {"observed", observed->str()},
          {"alice_histories", 4},
          {"pass", same && *observed == expected}};
}

json run_suite(const std::string& suite, std::uint64_t seed, std::optional<std::uint64_t> trials_flag,
               std::optional<Node> n_flag) {
  const auto trials_or = [&](std::uint64_t d) { return trials_flag.value_or(d); };
  const UniformRandomAlice random_alice;
  const GreedyCommonAlice greedy_alice;
  json out;

  if (suite == "lemma10") {
    if (n_flag) {
      out = lemma10_for(*n_flag);
    } else {
      json results = json::array();
      bool pass = true;
      for (Node n = 4; n <= 8; ++n) {
        results.push_back(lemma10_for(n));
        pass = pass && results.back()["pass"].get<bool>();
      }
      out = {{"results", results}, {"pass", pass}};
    }
  } else if (suite == "lemma7") {
    const Node horizon = n_flag.value_or(1000);
    const auto a = estimate_expected_isolations(random_alice, horizon, trials_or(100000), seed);
    const auto b = estimate_expected_isolations(greedy_alice, horizon, trials_or(100000), seed);
    const auto in_band = [](const EstimateReport& r) { return r.estimate >= 1.9 && r.estimate <= 2.1; };
    out = {{"random", to_json(a)},
           {"greedy_common", to_json(b)},
           {"expected", 2.0},
           {"truncation_bias_bound", 4.0 / (horizon - 2)},
           {"accept_interval", {1.9, 2.1}},
           {"pass", in_band(a) && in_band(b)}};
  } else if (suite == "lemma8") {
    const auto r = check_transition_table(trials_or(10000), seed, 5, n_flag.value_or(200));
    out = to_json(r);
    out["pass"] = r.violations == 0;
  } else if (suite == "transition") {
    const auto states = trials_or(200);
    const auto r = check_transition_law(states, 5000, seed);
    out = to_json(r);
    out["bonferroni_threshold"] = r.alpha / static_cast<double>(states);
    out["pass"] = r.min_p_value >= r.alpha / static_cast<double>(states);
  } else if (suite == "connectivity") {
    const Node n = n_flag.value_or(100);
    const auto r = connectivity_frequency(random_alice, n, trials_or(100000), seed);
    out = to_json(r);
    if (n == 100) {
      out["accept_interval"] = {0.82, 0.86};
      out["pass"] = r.estimate >= 0.82 && r.estimate <= 0.86;
    } else {
      out["pass"] = true;
    }
  } else if (suite == "common-edges") {
    const Node n = n_flag.value_or(100);
    const ScriptedAlice alice(fixed_alice_histories(std::max<Node>(n, 9))[1]);
    const auto r = common_edge_statistics(alice, n, trials_or(100000), seed);
    out = to_json(r);
    out["pass"] = std::abs(r.mean_common.estimate - r.expected_common) <= 4 * r.mean_common.standard_error &&
                  r.exceeds_log.estimate <= r.markov_bound;
  } else if (suite == "dmoves") {
    const Node n0 = n_flag.value_or(900);
    const auto greedy = dmove_trajectory_stats(greedy_alice, n0, trials_or(1000), seed);
    const auto random = dmove_trajectory_stats(random_alice, std::min<Node>(n0, 100), trials_or(1000), seed);
    out = {{"greedy_common", to_json(greedy)}, {"random", to_json(random)}};
    out["pass"] = greedy.fraction_at_least_third >= 0.99 && greedy.partition_holds && random.partition_holds;
  } else {
    throw Error("unknown suite '" + suite + "'");
  }

  out["suite"] = suite;
  out["seed"] = seed;
  out["version"] = version_string();
  return out;
}

// ---------------------------------------------------------------------------
// simulate

json simulate(const AliceStrategy& strategy, Node n, std::uint64_t trials, std::uint64_t seed,
              const std::string& csv_path) {
  std::ofstream csv;
  if (!csv_path.empty()) {
    csv.open(csv_path);
    if (!csv) throw Error("cannot write " + csv_path);
    csv << "trial,n,move_class,dS,dT,S,T,isolated\n";
  }
  std::int64_t connected = 0, isolations = 0, final_s = 0, final_t = 0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Rng rng = make_rng(seed, trial);
    const auto records = run_game(strategy, rng, n);
    for (const auto& r : records) {
      isolations += r.isolated_created;
      if (csv.is_open())
        csv << trial << ',' << r.node << ',' << to_string(r.move_class) << ',' << r.delta_s << ',' << r.delta_t
            << ',' << r.s << ',' << r.t << ',' << (r.isolated_created ? 1 : 0) << '\n';
    }
    const auto& last = records.back();
    connected += last.t <= 1;
    final_s += last.s;
    final_t += last.t;
  }
  const auto t = static_cast<double>(trials);
  return {{"strategy", strategy.name()},
          {"n", n},
          {"trials", trials},
          {"seed", seed},
          {"connected_fraction", connected / t},
          {"mean_isolations", isolations / t},
          {"mean_final_S", final_s / t},
          {"mean_final_T", final_t / t},
          {"version", version_string()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pedigree-polytope adjacency, the adjacency game and its experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version_string()));
  std::string tour_a, tour_b, tour, history, strategy = "random", emit_csv, suite, json_path, csv_path, out_path;
  bool dump_graph = false, allow_large = false;
  Node n = 100;
  std::uint64_t trials = 1;
  std::optional<std::uint64_t> seed, trials_opt;
  std::optional<Node> n_opt;

  app.add_option("--out", out_path, "Write the JSON result to this file instead of stdout");
  app.fallthrough();

  auto* adjacency = app.add_subcommand("adjacency", "Test two tours for adjacency on the Pedigree polytope");
  adjacency->add_option("--tour-a", tour_a, "First tour (labels or 'n: i j' history lines; @file reads a file)")->required();
  adjacency->add_option("--tour-b", tour_b, "Second tour")->required();
  adjacency->add_flag("--dump-graph", dump_graph, "Include the pedigree graph in the output");

  auto* sim = app.add_subcommand("simulate", "Play the adjacency game against a uniformly random Bob");
  sim->add_option("--strategy", strategy, "random | greedy-common | scripted:<file>");
  sim->add_option("--n", n, "Horizon (last node inserted)")->check(CLI::Range(4, kMaxNodes));
  sim->add_option("--trials", trials, "Number of games")->check(CLI::PositiveNumber);
  sim->add_option("--seed", seed, "Base seed; generated and printed when omitted");
  sim->add_option("--emit", emit_csv, "Write per-step telemetry CSV");

  auto* validate = app.add_subcommand("validate", "Run a validation suite");
  validate->add_option("--suite", suite, "lemma10 | lemma7 | lemma8 | transition | connectivity | common-edges | dmoves")
      ->required()
      ->check(CLI::IsMember({"lemma10", "lemma7", "lemma8", "transition", "connectivity", "common-edges", "dmoves"}));
  validate->add_option("--seed", seed, "Base seed; generated and printed when omitted");
  validate->add_option("--trials", trials_opt, "Trials or sampled states");
  validate->add_option("--n", n_opt, "Node count / horizon where the suite takes one");
  validate->add_option("--json", json_path, "Also write the report to this file");

  auto* skeleton = app.add_subcommand("skeleton", "Degree census of the Pedigree-polytope graph for small n");
  skeleton->add_option("--n", n, "Number of cities")->required()->check(CLI::Range(4, 12));
  skeleton->add_option("--csv", csv_path, "Write per-tour degrees");
  skeleton->add_flag("--allow-large", allow_large, "Permit n > 8");

  auto* decode = app.add_subcommand("decode", "Print the insertion history of a tour");
  decode->add_option("--tour", tour, "Tour (or @file)")->required();

  auto* replay = app.add_subcommand("replay", "Replay an insertion history into a tour");
  replay->add_option("--history", history, "History lines, decode JSON, or a tour (@file reads a file)")->required();
  replay->add_option("--n", n_opt, "Stop after this node");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*adjacency) {
      const auto a = read_tour_arg(tour_a);
      const auto b = read_tour_arg(tour_b);
      const auto verdict = pedigree_adjacent(a, b);
      json out = {{"adjacent", verdict.adjacent},
                  {"n", a.size()},
                  {"components", verdict.witness.component_count()},
                  {"vertex_count", verdict.witness.vertices().size()},
                  {"tour_a", a.str()},
                  {"tour_b", b.str()}};
      if (dump_graph) out["graph"] = graph_to_json(verdict.witness);
      emit(out, out_path);
      return verdict.adjacent ? kExitOk : kExitNegative;
    }
    if (*sim) {
      const auto s = make_strategy(strategy);
      emit(simulate(*s, n, trials, resolve_seed(seed), emit_csv), out_path);
      return kExitOk;
    }
    if (*validate) {
      const std::uint64_t s = suite == "lemma10" ? seed.value_or(0) : resolve_seed(seed);
      const auto out = run_suite(suite, s, trials_opt, n_opt);
      emit(out, out_path);
      if (!json_path.empty()) emit(out, json_path);
      return out["pass"].get<bool>() ? kExitOk : kExitNegative;
    }
    if (*skeleton) {
      const auto report = enumerate_skeleton(n, allow_large);
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw Error("cannot write " + csv_path);
        csv << "tour,degree\n";
        for (std::size_t i = 0; i < report.tours.size(); ++i) csv << report.tours[i].str() << ',' << report.degrees[i] << '\n';
      }
      auto out = to_json(report);
      out["version"] = version_string();
      emit(out, out_path);
      return kExitOk;
    }
    if (*decode) {
      emit(history_to_json(read_history_arg(tour)), out_path, -1);
      return kExitOk;
    }
    if (*replay) {
      const auto h = read_history_arg(history);
      const Node upto = n_opt.value_or(h.length());
      const auto t = replay_history(h, upto);
      emit(json{{"n", upto}, {"tour", t.order()}, {"text", t.str()}}, out_path, -1);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
