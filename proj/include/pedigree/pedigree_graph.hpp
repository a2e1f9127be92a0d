#ifndef PEDIGREE_PEDIGREE_GRAPH_HPP
#define PEDIGREE_PEDIGREE_GRAPH_HPP

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "pedigree/disjoint_set.hpp"
#include "pedigree/history.hpp"

namespace pedigree {

/// Bit flags so that parallel edges of different kinds can share one
/// undirected edge.
enum class EdgeType : std::uint8_t {
  T1_AtoB = 1,
  T1_BtoA = 2,
  T2_AtoB = 4,
  T2_BtoA = 8,
};

inline constexpr std::array<EdgeType, 4> kEdgeTypes = {
    EdgeType::T1_AtoB, EdgeType::T1_BtoA, EdgeType::T2_AtoB, EdgeType::T2_BtoA};

std::string_view to_string(EdgeType t);

inline bool is_a_to_b(EdgeType t) { return t == EdgeType::T1_AtoB || t == EdgeType::T2_AtoB; }

/// The mirror type when the roles of A and B are exchanged.
EdgeType swapped(EdgeType t);

/// An edge from the new vertex to an earlier vertex `other`.
struct PedigreeEdge {
  Node other = 0;
  EdgeType type = EdgeType::T1_AtoB;
  friend auto operator<=>(const PedigreeEdge&, const PedigreeEdge&) = default;
};

/// At most one edge per rule, so never more than four.
class IncidentEdges {
 public:
  void push(PedigreeEdge e) { items_[count_++] = e; }
  const PedigreeEdge* begin() const { return items_.data(); }
  const PedigreeEdge* end() const { return items_.data() + count_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

 private:
  std::array<PedigreeEdge, 4> items_{};
  std::size_t count_ = 0;
};

/// Edges between a new vertex n and earlier vertices, given the edges each
/// side inserted n into and the two cycles (grown at least to n - 1; any
/// later growth is ignored). Caller guarantees nu_a != nu_b.
IncidentEdges rule_edges(const CycleEdge& nu_a, const CycleEdge& nu_b, Node n,
                         const GrowingCycle& a, const GrowingCycle& b);

/// n is a vertex iff nu_A(n) != nu_B(n). False for n < 4.
bool is_vertex(const InsertionHistory& ha, const InsertionHistory& hb, Node n);

/// All edges between vertex n and earlier vertices, sorted. Throws if n is
/// not a vertex.
std::vector<PedigreeEdge> new_edges(const InsertionHistory& ha, const InsertionHistory& hb, Node n);

/// The pedigree graph G_n of two insertion histories.
///
/// Vertices are a subset of {4..n}. Parallel edges of different types are
/// stored once with the union of their type flags. Components are tracked
/// with a forward-only disjoint-set structure; the vertexless graph has zero
/// components and counts as connected.
class PedigreeGraph {
 public:
  struct Edge {
    Node lower = 0;
    Node upper = 0;
    std::uint8_t types = 0;
    bool has(EdgeType t) const { return types & static_cast<std::uint8_t>(t); }
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  explicit PedigreeGraph(Node capacity = 3);

  Node time() const { return time_; }
  bool has_vertex(Node v) const { return v >= 4 && v <= time_ && vertex_[v]; }
  const std::vector<Node>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int component_count() const { return components_count_; }
  bool is_connected() const { return components_count_ <= 1; }

  /// Vertex lists of all components, each sorted, ordered by smallest vertex.
  std::vector<std::vector<Node>> components() const;

  /// Representative of v's component; stable until the next advance().
  Node component_of(Node v) const { return dsu_.root(v); }

  int degree(Node v) const { return degree_[v]; }
  int lower_degree(Node v) const { return lower_degree_[v]; }

  /// Moves from time() to time() + 1. With `vertex` false the graph is
  /// unchanged; otherwise the new vertex is added with the given edges.
  void advance(bool vertex, const IncidentEdges& incident);

  /// Change in component count that advance() would cause.
  int component_delta(bool vertex, const IncidentEdges& incident) const;

 private:
  Node time_ = 3;
  std::vector<std::uint8_t> vertex_;
  std::vector<Node> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> degree_;
  std::vector<std::uint8_t> lower_degree_;
  DisjointSet dsu_;
  int components_count_ = 0;
};

/// G_n from G_{n-1}; both histories must reach n = g.time() + 1.
PedigreeGraph extend(PedigreeGraph g, const InsertionHistory& ha, const InsertionHistory& hb);

/// G_n folded from the empty G_3.
PedigreeGraph build(const InsertionHistory& ha, const InsertionHistory& hb, Node n);

// Independent recomputations from tours and segments, used to cross-check
// the rule-based construction.

/// n is isolated in G_n iff it is a vertex, nu_A(n) is a cycle-edge of B_n
/// and nu_B(n) is a cycle-edge of A_n.
bool isolated_oracle(const InsertionHistory& ha, const InsertionHistory& hb, Node n);

/// The "A to B" edges at n derived from the segment of B_{n-1} between the
/// ends of nu_A(n). Call with the histories swapped (and types mirrored) for
/// the other direction.
std::vector<PedigreeEdge> segment_edge_oracle(const InsertionHistory& ha, const InsertionHistory& hb,
                                              Node n);

/// Component count by breadth-first search over the edge list.
int count_components_by_traversal(const PedigreeGraph& g);

}  // namespace pedigree

#endif  // PEDIGREE_PEDIGREE_GRAPH_HPP
