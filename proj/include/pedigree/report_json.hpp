#ifndef PEDIGREE_REPORT_JSON_HPP
#define PEDIGREE_REPORT_JSON_HPP

#include <json.hpp>

#include "pedigree/experiments.hpp"

namespace pedigree {

/// {n, vertices, edges: [{u, v, types}], components}
nlohmann::json graph_to_json(const PedigreeGraph& g);

/// {"4": [i, j], ...}
nlohmann::json history_to_json(const InsertionHistory& h);

/// Inverse of history_to_json.
InsertionHistory history_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EstimateReport& r);
nlohmann::json to_json(const CommonEdgeReport& r);
nlohmann::json to_json(const DMoveReport& r);
nlohmann::json to_json(const SkeletonReport& r);
nlohmann::json to_json(const TransitionTableReport& r);
nlohmann::json to_json(const TransitionLawReport& r);

/// `git describe` of the source tree at configure time.
const char* version_string();

}  // namespace pedigree

#endif  // PEDIGREE_REPORT_JSON_HPP
