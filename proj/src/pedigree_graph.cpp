#include "pedigree/pedigree_graph.hpp"

#include <algorithm>
#include <queue>

namespace pedigree {

std::string_view to_string(EdgeType t) {
  switch (t) {
    case EdgeType::T1_AtoB: return "T1_AtoB";
    case EdgeType::T1_BtoA: return "T1_BtoA";
    case EdgeType::T2_AtoB: return "T2_AtoB";
    case EdgeType::T2_BtoA: return "T2_BtoA";
  }
  return "?";
}

EdgeType swapped(EdgeType t) {
  switch (t) {
    case EdgeType::T1_AtoB: return EdgeType::T1_BtoA;
    case EdgeType::T1_BtoA: return EdgeType::T1_AtoB;
    case EdgeType::T2_AtoB: return EdgeType::T2_BtoA;
    case EdgeType::T2_BtoA: return EdgeType::T2_AtoB;
  }
  return t;
}

namespace {

// One direction of the rules. `own` is the inserting side's edge at n, the
// other side's cycle is `theirs`.
void add_directed(const CycleEdge& own, Node n, const GrowingCycle& theirs, EdgeType type1,
                  EdgeType type2, IncidentEdges& out) {
  // Type 1: own == nu_theirs(k) for some earlier k.
  const Node k = theirs.inserter(own);
  if (k != 0 && k < n) out.push({k, type1});

  // Type 2: to l = max(own) unless nu_theirs(l) meets own. For l <= 3 the
  // fixed values nu(2) = {1}, nu(3) = {1,2} always meet own.
  const Node l = own.hi();
  if (l > 3 && !theirs.nu(l).contains(own.lo())) out.push({l, type2});
}

}  // namespace

IncidentEdges rule_edges(const CycleEdge& nu_a, const CycleEdge& nu_b, Node n, const GrowingCycle& a,
                         const GrowingCycle& b) {
  IncidentEdges out;
  add_directed(nu_a, n, b, EdgeType::T1_AtoB, EdgeType::T2_AtoB, out);
  add_directed(nu_b, n, a, EdgeType::T1_BtoA, EdgeType::T2_BtoA, out);
  return out;
}

bool is_vertex(const InsertionHistory& ha, const InsertionHistory& hb, Node n) {
  if (n < 4) return false;
  return ha.nu(n) != hb.nu(n);
}

std::vector<PedigreeEdge> new_edges(const InsertionHistory& ha, const InsertionHistory& hb, Node n) {
  if (!is_vertex(ha, hb, n))
    throw ValidationError("node " + std::to_string(n) + " is not a pedigree-graph vertex", n);
  const auto incident = rule_edges(ha.nu(n), hb.nu(n), n, ha.cycle(), hb.cycle());
  std::vector<PedigreeEdge> out(incident.begin(), incident.end());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// PedigreeGraph

PedigreeGraph::PedigreeGraph(Node capacity) {
  const auto size = static_cast<std::size_t>(std::max<Node>(capacity, 3)) + 1;
  vertex_.reserve(size);
  degree_.reserve(size);
  lower_degree_.reserve(size);
  vertex_.resize(4, 0);
  degree_.resize(4, 0);
  lower_degree_.resize(4, 0);
  dsu_.grow(4);
}

void PedigreeGraph::advance(bool vertex, const IncidentEdges& incident) {
  const Node n = ++time_;
  vertex_.push_back(vertex ? 1 : 0);
  degree_.push_back(0);
  lower_degree_.push_back(0);
  if (dsu_.capacity() <= static_cast<std::size_t>(n)) dsu_.grow(std::max<std::size_t>(n + 1, 2 * dsu_.capacity()));
  if (!vertex) return;

  vertices_.push_back(n);
  ++components_count_;

  const auto first = edges_.size();
  for (const auto& e : incident) {
    auto it = std::find_if(edges_.begin() + static_cast<std::ptrdiff_t>(first), edges_.end(),
                           [&](const Edge& x) { return x.lower == e.other; });
    if (it != edges_.end()) {
      it->types |= static_cast<std::uint8_t>(e.type);
      continue;
    }
    edges_.push_back({e.other, n, static_cast<std::uint8_t>(e.type)});
    ++degree_[e.other];
    ++degree_[n];
    ++lower_degree_[n];
    if (dsu_.unite(n, e.other)) --components_count_;
  }
}

int PedigreeGraph::component_delta(bool vertex, const IncidentEdges& incident) const {
  if (!vertex) return 0;
  std::array<Node, 4> roots{};
  std::size_t distinct = 0;
  for (const auto& e : incident) {
    const Node r = dsu_.root(e.other);
    if (std::find(roots.begin(), roots.begin() + static_cast<std::ptrdiff_t>(distinct), r) ==
        roots.begin() + static_cast<std::ptrdiff_t>(distinct))
      roots[distinct++] = r;
  }
  return 1 - static_cast<int>(distinct);
}

std::vector<std::vector<Node>> PedigreeGraph::components() const {
  std::vector<std::vector<Node>> out;
  std::vector<int> slot(vertex_.size(), -1);
  for (Node v : vertices_) {
    const Node r = dsu_.root(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

PedigreeGraph extend(PedigreeGraph g, const InsertionHistory& ha, const InsertionHistory& hb) {
  const Node n = g.time() + 1;
  if (ha.length() < n || hb.length() < n)
    throw ValidationError("histories end before node " + std::to_string(n), n);
  const auto nu_a = ha.nu(n);
  const auto nu_b = hb.nu(n);
  if (nu_a == nu_b) {
    g.advance(false, {});
  } else {
    g.advance(true, rule_edges(nu_a, nu_b, n, ha.cycle(), hb.cycle()));
  }
  return g;
}

PedigreeGraph build(const InsertionHistory& ha, const InsertionHistory& hb, Node n) {
  if (n < 3 || ha.length() < n || hb.length() < n)
    throw ValidationError("cannot build the pedigree graph at time " + std::to_string(n), n);
  PedigreeGraph g(n);
  while (g.time() < n) g = extend(std::move(g), ha, hb);
  return g;
}

// ---------------------------------------------------------------------------
// Oracles

bool isolated_oracle(const InsertionHistory& ha, const InsertionHistory& hb, Node n) {
  if (!is_vertex(ha, hb, n)) return false;
  return replay_history(hb, n).has_edge(ha.nu(n)) && replay_history(ha, n).has_edge(hb.nu(n));
}

std::vector<PedigreeEdge> segment_edge_oracle(const InsertionHistory& ha, const InsertionHistory& hb,
                                              Node n) {
  const auto own = ha.nu(n);
  const Tour b_before = replay_history(hb, n - 1);
  if (b_before.has_edge(own)) return {};

  const auto seg = segment_between(b_before, own.lo(), own.hi());
  const Node smallest = *std::min_element(seg.begin(), seg.end());
  if (smallest > own.hi()) return {{smallest, EdgeType::T1_AtoB}};
  return {{own.hi(), EdgeType::T2_AtoB}};
}

int count_components_by_traversal(const PedigreeGraph& g) {
  const Node n = g.time();
  std::vector<std::vector<Node>> adj(static_cast<std::size_t>(n) + 1);
  for (const auto& e : g.edges()) {
    adj[e.lower].push_back(e.upper);
    adj[e.upper].push_back(e.lower);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  int count = 0;
  for (Node v : g.vertices()) {
    if (seen[v]) continue;
    ++count;
    std::queue<Node> q;
    q.push(v);
    seen[v] = true;
    while (!q.empty()) {
      const Node u = q.front();
      q.pop();
      for (Node w : adj[u]) {
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
      }
    }
  }
  return count;
}

}  // namespace pedigree
