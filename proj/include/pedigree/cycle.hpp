#ifndef PEDIGREE_CYCLE_HPP
#define PEDIGREE_CYCLE_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pedigree/error.hpp"

namespace pedigree {

/// Node labels are 1-based; 0 is used as "no node" in the flat tables below.
using Node = std::int32_t;

/// Hard ceiling on cycle length accepted anywhere in the library.
inline constexpr Node kMaxNodes = 1'000'000;

/// An unordered pair of distinct nodes, stored as (lo, hi) with lo < hi.
class CycleEdge {
 public:
  CycleEdge() = default;
  CycleEdge(Node a, Node b);

  Node lo() const { return lo_; }
  Node hi() const { return hi_; }

  bool contains(Node v) const { return v == lo_ || v == hi_; }
  bool touches(const CycleEdge& other) const {
    return contains(other.lo_) || contains(other.hi_);
  }

  /// Packs the pair into one integer; used as a hash key.
  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(lo_) << 32) | static_cast<std::uint32_t>(hi_);
  }

  friend auto operator<=>(const CycleEdge&, const CycleEdge&) = default;

  std::string str() const;

 private:
  Node lo_ = 0;
  Node hi_ = 0;
};

/// Signed neighbours of a node at the time it was inserted. Either side may be
/// absent (node 1), and for node 2 both sides are node 1.
struct NuPair {
  std::optional<Node> neg;
  std::optional<Node> pos;
  friend bool operator==(const NuPair&, const NuPair&) = default;
};

/// A cycle on [n] in canonical presentation: rotation starting at node 1,
/// traversed in positive direction (node 2 is met before node 3).
class Tour {
 public:
  /// Accepts any rotation or reflection of a cycle on [n], n >= 3.
  explicit Tour(std::vector<Node> order);

  std::size_t size() const { return order_.size(); }
  std::span<const Node> order() const { return order_; }
  Node operator[](std::size_t i) const { return order_[i]; }

  /// Position of every node in order(); index 0 is unused.
  std::vector<std::size_t> positions() const;

  bool has_edge(const CycleEdge& e) const;

  /// The k-th cycle-edge (1-based), counted in positive direction from node 1.
  CycleEdge edge_at_index(std::size_t k) const;

  std::vector<CycleEdge> edges() const;

  std::string str() const;

  friend bool operator==(const Tour&, const Tour&) = default;

 private:
  std::vector<Node> order_;
};

/// Open arc between i and j that avoids min({1,2,3} \ {i,j}).
std::vector<Node> segment_between(const Tour& t, Node i, Node j);

/// The node k with nu(k) == e, recovered from the tour alone: the minimum of
/// the segment between e's endpoints when that segment is nonempty and all
/// of its nodes exceed both endpoints.
std::optional<Node> find_inserter(const Tour& t, const CycleEdge& e);

/// A cycle that grows one node at a time by subdividing one of its edges.
///
/// Besides the successor/predecessor tables it records, for every node k,
/// the signed neighbours nu+(k), nu-(k) at insertion time and, for every edge
/// that ever existed, which later node (if any) was inserted into it. An edge
/// {i, j} with i < j can only have been created at time j, as {j, nu+(j)} or
/// {j, nu-(j)}, so the inserter table is two slots per node.
class GrowingCycle {
 public:
  /// Starts from the unique cycle (1, 2, 3).
  explicit GrowingCycle(Node capacity = 3);

  Node size() const { return size_; }

  Node next(Node v) const { return next_[v]; }
  Node prev(Node v) const { return prev_[v]; }

  bool has_edge(Node a, Node b) const {
    return a >= 1 && a <= size_ && b >= 1 && b <= size_ && a != b &&
           (next_[a] == b || prev_[a] == b);
  }
  bool has_edge(const CycleEdge& e) const { return has_edge(e.lo(), e.hi()); }

  /// The edge leaving v in positive direction. Every edge has exactly one
  /// such tail, so v in [1, size] enumerates the edges.
  CycleEdge edge_from(Node v) const { return CycleEdge(v, next_[v]); }

  /// Subdivides e with node size()+1. Throws ValidationError if e is not
  /// a current cycle-edge.
  Node insert(const CycleEdge& e);

  /// nu(k) for 3 <= k <= size().
  CycleEdge nu(Node k) const { return CycleEdge(nu_minus_[k], nu_plus_[k]); }
  Node nu_plus(Node k) const { return nu_plus_[k]; }
  Node nu_minus(Node k) const { return nu_minus_[k]; }

  /// Node inserted into e, or 0 if e was never subdivided (or never existed).
  Node inserter(const CycleEdge& e) const;

  std::vector<CycleEdge> edges() const;
  CycleEdge edge_at_index(Node k) const;

  Tour tour() const;

  void reserve(Node capacity);

 private:
  Node size_ = 3;
  std::vector<Node> next_;
  std::vector<Node> prev_;
  std::vector<Node> nu_plus_;
  std::vector<Node> nu_minus_;
  std::vector<Node> inserted_plus_;   // inserter of {k, nu+(k)}
  std::vector<Node> inserted_minus_;  // inserter of {k, nu-(k)}
};

}  // namespace pedigree

template <>
struct std::hash<pedigree::CycleEdge> {
  std::size_t operator()(const pedigree::CycleEdge& e) const noexcept {
    return std::hash<std::uint64_t>{}(e.key());
  }
};

#endif  // PEDIGREE_CYCLE_HPP
