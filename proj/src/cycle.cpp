#include "pedigree/cycle.hpp"

#include <algorithm>
#include <sstream>

namespace pedigree {

CycleEdge::CycleEdge(Node a, Node b) : lo_(std::min(a, b)), hi_(std::max(a, b)) {
  if (a == b) throw ValidationError("cycle-edge endpoints must differ: " + std::to_string(a), a);
  if (lo_ < 1) throw ValidationError("node labels start at 1", lo_);
}

std::string CycleEdge::str() const {
  return "{" + std::to_string(lo_) + "," + std::to_string(hi_) + "}";
}

// ---------------------------------------------------------------------------
// Tour

Tour::Tour(std::vector<Node> order) : order_(std::move(order)) {
  const auto n = order_.size();
  if (n < 3) throw ValidationError("a tour needs at least 3 nodes");
  if (n > static_cast<std::size_t>(kMaxNodes))
    throw ValidationError("tour exceeds the node ceiling");

  std::vector<bool> seen(n + 1, false);
  for (Node v : order_) {
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw ValidationError("node " + std::to_string(v) + " is outside [1," + std::to_string(n) + "]", v);
    if (seen[v]) throw ValidationError("node " + std::to_string(v) + " appears twice", v);
    seen[v] = true;
  }

  auto one = std::find(order_.begin(), order_.end(), 1);
  std::rotate(order_.begin(), one, order_.end());
  auto two = std::find(order_.begin(), order_.end(), 2);
  auto three = std::find(order_.begin(), order_.end(), 3);
  if (three < two) std::reverse(order_.begin() + 1, order_.end());
}

std::vector<std::size_t> Tour::positions() const {
  std::vector<std::size_t> pos(order_.size() + 1, 0);
  for (std::size_t i = 0; i < order_.size(); ++i) pos[order_[i]] = i;
  return pos;
}

bool Tour::has_edge(const CycleEdge& e) const {
  const auto n = order_.size();
  if (static_cast<std::size_t>(e.hi()) > n) return false;
  auto it = std::find(order_.begin(), order_.end(), e.lo());
  const auto i = static_cast<std::size_t>(it - order_.begin());
  return order_[(i + 1) % n] == e.hi() || order_[(i + n - 1) % n] == e.hi();
}

CycleEdge Tour::edge_at_index(std::size_t k) const {
  const auto n = order_.size();
  if (k < 1 || k > n)
    throw ValidationError("edge index " + std::to_string(k) + " outside [1," + std::to_string(n) + "]");
  return CycleEdge(order_[k - 1], order_[k % n]);
}

std::vector<CycleEdge> Tour::edges() const {
  std::vector<CycleEdge> out;
  out.reserve(order_.size());
  for (std::size_t k = 1; k <= order_.size(); ++k) out.push_back(edge_at_index(k));
  return out;
}

std::string Tour::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < order_.size(); ++i) os << (i ? " " : "") << order_[i];
  return os.str();
}

std::vector<Node> segment_between(const Tour& t, Node i, Node j) {
  const auto n = t.size();
  if (i == j) throw ValidationError("segment endpoints must differ", i);
  if (i < 1 || j < 1 || static_cast<std::size_t>(std::max(i, j)) > n)
    throw ValidationError("segment endpoint not in tour", std::max(i, j));

  Node reference = 1;
  while (reference == i || reference == j) ++reference;

  const auto pos = t.positions();
  std::vector<Node> arc;
  bool has_reference = false;
  for (auto p = (pos[i] + 1) % n; p != pos[j]; p = (p + 1) % n) {
    arc.push_back(t[p]);
    has_reference |= t[p] == reference;
  }
  if (!has_reference) return arc;

  arc.clear();
  for (auto p = (pos[j] + 1) % n; p != pos[i]; p = (p + 1) % n) arc.push_back(t[p]);
  std::reverse(arc.begin(), arc.end());
  return arc;
}

std::optional<Node> find_inserter(const Tour& t, const CycleEdge& e) {
  const auto seg = segment_between(t, e.lo(), e.hi());
  if (seg.empty()) return std::nullopt;
  const Node smallest = *std::min_element(seg.begin(), seg.end());
  if (smallest < e.hi()) return std::nullopt;
  return smallest;
}

// ---------------------------------------------------------------------------
// GrowingCycle

GrowingCycle::GrowingCycle(Node capacity) {
  reserve(std::max<Node>(capacity, 3));
  next_[1] = 2; next_[2] = 3; next_[3] = 1;
  prev_[1] = 3; prev_[2] = 1; prev_[3] = 2;
  nu_plus_[2] = nu_minus_[2] = 1;
  nu_plus_[3] = 1;
  nu_minus_[3] = 2;
}

void GrowingCycle::reserve(Node capacity) {
  if (capacity > kMaxNodes) throw ValidationError("cycle exceeds the node ceiling", capacity);
  const auto want = static_cast<std::size_t>(capacity) + 1;
  if (next_.size() >= want) return;
  for (auto* v : {&next_, &prev_, &nu_plus_, &nu_minus_, &inserted_plus_, &inserted_minus_})
    v->resize(want, 0);
}

Node GrowingCycle::insert(const CycleEdge& e) {
  const Node n = size_ + 1;
  if (!has_edge(e))
    throw ValidationError(e.str() + " is not a cycle-edge at time " + std::to_string(size_) +
                              " (inserting node " + std::to_string(n) + ")",
                          n);
  if (n > kMaxNodes) throw ValidationError("cycle exceeds the node ceiling", n);
  if (static_cast<std::size_t>(n) >= next_.size()) reserve(std::max<Node>(n, 2 * size_));

  // Orient e along the positive direction: from -> to.
  const Node from = next_[e.lo()] == e.hi() ? e.lo() : e.hi();
  const Node to = next_[from];

  Node& slot = (nu_plus_[e.hi()] == e.lo()) ? inserted_plus_[e.hi()] : inserted_minus_[e.hi()];
  slot = n;

  next_[from] = n;
  prev_[n] = from;
  next_[n] = to;
  prev_[to] = n;
  nu_plus_[n] = to;
  nu_minus_[n] = from;
  size_ = n;
  return n;
}

Node GrowingCycle::inserter(const CycleEdge& e) const {
  const Node j = e.hi();
  if (j > size_) return 0;
  if (nu_plus_[j] == e.lo()) return inserted_plus_[j];
  if (nu_minus_[j] == e.lo()) return inserted_minus_[j];
  return 0;
}

std::vector<CycleEdge> GrowingCycle::edges() const {
  std::vector<CycleEdge> out;
  out.reserve(size_);
  Node v = 1;
  do {
    out.emplace_back(v, next_[v]);
    v = next_[v];
  } while (v != 1);
  return out;
}

CycleEdge GrowingCycle::edge_at_index(Node k) const {
  if (k < 1 || k > size_)
    throw ValidationError("edge index " + std::to_string(k) + " outside [1," + std::to_string(size_) + "]");
  Node v = 1;
  for (Node i = 1; i < k; ++i) v = next_[v];
  return CycleEdge(v, next_[v]);
}

Tour GrowingCycle::tour() const {
  std::vector<Node> order;
  order.reserve(size_);
  Node v = 1;
  do {
    order.push_back(v);
    v = next_[v];
  } while (v != 1);
  return Tour(std::move(order));
}

}  // namespace pedigree
