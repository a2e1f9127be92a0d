#include "pedigree/history.hpp"

namespace pedigree {

InsertionHistory::InsertionHistory(std::span<const CycleEdge> insertions)
    : cycle_(static_cast<Node>(insertions.size()) + 3) {
  for (const auto& e : insertions) cycle_.insert(e);
}

InsertionHistory InsertionHistory::from_map(const std::map<Node, CycleEdge>& nu) {
  std::vector<CycleEdge> seq;
  seq.reserve(nu.size());
  Node expected = 4;
  for (const auto& [k, e] : nu) {
    if (k != expected)
      throw ValidationError("history must list nodes 4..N without gaps; missing node " +
                                std::to_string(expected),
                            expected);
    seq.push_back(e);
    ++expected;
  }
  return InsertionHistory(seq);
}

InsertionHistory InsertionHistory::from_cycle(GrowingCycle cycle) {
  InsertionHistory h;
  h.cycle_ = std::move(cycle);
  return h;
}

CycleEdge InsertionHistory::nu(Node k) const {
  if (k < 3 || k > length())
    throw ValidationError("nu(" + std::to_string(k) + ") outside [3," + std::to_string(length()) + "]", k);
  return cycle_.nu(k);
}

NuPair InsertionHistory::nu_of(Node k) const {
  if (k < 1 || k > length())
    throw ValidationError("node " + std::to_string(k) + " outside [1," + std::to_string(length()) + "]", k);
  if (k == 1) return {};
  return {cycle_.nu_minus(k), cycle_.nu_plus(k)};
}

std::optional<Node> InsertionHistory::inserter(const CycleEdge& e, Node limit) const {
  const Node k = cycle_.inserter(e);
  if (k == 0 || k > limit) return std::nullopt;
  return k;
}

std::vector<CycleEdge> InsertionHistory::insertions() const {
  std::vector<CycleEdge> out;
  out.reserve(length() > 3 ? length() - 3 : 0);
  for (Node k = 4; k <= length(); ++k) out.push_back(cycle_.nu(k));
  return out;
}

InsertionHistory InsertionHistory::prefix(Node n) const {
  if (n < 3 || n > length())
    throw ValidationError("prefix length " + std::to_string(n) + " outside [3," + std::to_string(length()) + "]", n);
  const auto all = insertions();
  return InsertionHistory(std::span(all).first(static_cast<std::size_t>(n - 3)));
}

Tour replay_history(const InsertionHistory& h, Node n) {
  if (n < 3 || n > h.length())
    throw ValidationError("replay length " + std::to_string(n) + " outside [3," + std::to_string(h.length()) + "]", n);
  GrowingCycle cycle(n);
  for (Node k = 4; k <= n; ++k) cycle.insert(h.nu(k));
  return cycle.tour();
}

InsertionHistory decode_tour(const Tour& t) {
  const auto n = static_cast<Node>(t.size());
  std::vector<Node> next(n + 1), prev(n + 1);
  for (std::size_t i = 0; i < t.size(); ++i) {
    next[t[i]] = t[(i + 1) % t.size()];
    prev[t[(i + 1) % t.size()]] = t[i];
  }
  std::vector<CycleEdge> nu(n > 3 ? n - 3 : 0);
  for (Node k = n; k >= 4; --k) {
    nu[k - 4] = CycleEdge(prev[k], next[k]);
    next[prev[k]] = next[k];
    prev[next[k]] = prev[k];
  }
  return InsertionHistory(nu);
}

}  // namespace pedigree
