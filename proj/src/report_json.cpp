#include "pedigree/report_json.hpp"

#ifndef PEDIGREE_VERSION
#define PEDIGREE_VERSION "unknown"
#endif

namespace pedigree {

using nlohmann::json;

const char* version_string() { return PEDIGREE_VERSION; }

json graph_to_json(const PedigreeGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) {
    json types = json::array();
    for (auto t : kEdgeTypes)
      if (e.has(t)) types.push_back(to_string(t));
    edges.push_back({{"u", e.lower}, {"v", e.upper}, {"types", types}});
  }
  return {{"n", g.time()}, {"vertices", g.vertices()}, {"edges", edges}, {"components", g.components()}};
}

json history_to_json(const InsertionHistory& h) {
  json out = json::object();
  for (Node k = 4; k <= h.length(); ++k) {
    const auto e = h.nu(k);
    out[std::to_string(k)] = {e.lo(), e.hi()};
  }
  return out;
}

InsertionHistory history_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("history JSON must be an object");
  std::map<Node, CycleEdge> nu;
  for (const auto& [key, value] : j.items()) {
    Node k = 0;
    try {
      k = std::stoi(key);
    } catch (const std::exception&) {
      throw ValidationError("history key '" + key + "' is not a node label");
    }
    if (!value.is_array() || value.size() != 2)
      throw ValidationError("history entry " + key + " must be a pair of nodes", k);
    nu.emplace(k, CycleEdge(value[0].get<Node>(), value[1].get<Node>()));
  }
  return InsertionHistory::from_map(nu);
}

json to_json(const EstimateReport& r) {
  return {{"quantity", r.quantity}, {"estimate", r.estimate}, {"standard_error", r.standard_error},
          {"trials", r.trials},     {"horizon", r.horizon},   {"seed", r.seed}};
}

json to_json(const CommonEdgeReport& r) {
  return {{"mean_common", to_json(r.mean_common)},
          {"exceeds_log", to_json(r.exceeds_log)},
          {"expected_common", r.expected_common},
          {"markov_bound", r.markov_bound}};
}

namespace {

template <class Map>
json histogram_json(const Map& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

}  // namespace

json to_json(const DMoveReport& r) {
  return {{"d_moves", to_json(r.d_moves)},
          {"any_t_decrease", to_json(r.any_t_decrease)},
          {"fraction_at_least_third", r.fraction_at_least_third},
          {"min_d_moves", r.min_d_moves},
          {"max_d_moves", r.max_d_moves},
          {"partition_holds", r.partition_holds},
          {"histogram", histogram_json(r.histogram)}};
}

json to_json(const SkeletonReport& r) {
  return {{"n", r.n},
          {"vertex_count", r.vertex_count},
          {"edge_count", r.edge_count},
          {"min_degree", r.min_degree},
          {"max_degree", r.max_degree},
          {"degree_histogram", histogram_json(r.degree_histogram)},
          {"is_complete", r.is_complete},
          {"is_regular", r.is_regular},
          {"symmetric", r.symmetric},
          {"density", r.density}};
}

json to_json(const TransitionTableReport& r) {
  return {{"states", r.states},
          {"c_move_states", r.c_move_states},
          {"d_move_states", r.d_move_states},
          {"violations", r.violations},
          {"violations_by_rule", r.violations_by_rule},
          {"first_violations", r.first_violations}};
}

json to_json(const TransitionLawReport& r) {
  return {{"states", r.states},
          {"draws_per_state", r.draws_per_state},
          {"min_p_value", r.min_p_value},
          {"rejections", r.rejections},
          {"alpha", r.alpha}};
}

}  // namespace pedigree
