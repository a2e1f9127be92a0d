#ifndef PEDIGREE_HISTORY_HPP
#define PEDIGREE_HISTORY_HPP

#include <map>
#include <random>
#include <vector>

#include "pedigree/cycle.hpp"

namespace pedigree {

/// The pedigree encoding of a cycle: for every node n = 4..N the cycle-edge
/// nu(n) it subdivided when it was added.
///
/// Construction replays the insertions once and keeps the replayed cycle, so
/// nu+/nu- and inserter lookups are O(1) afterwards. Immutable once built.
class InsertionHistory {
 public:
  /// The empty history (N = 3).
  InsertionHistory() = default;

  /// `insertions[i]` is nu(i + 4). Throws ValidationError naming the first
  /// node whose edge does not exist at insertion time.
  explicit InsertionHistory(std::span<const CycleEdge> insertions);

  /// Keys must be exactly 4..N.
  static InsertionHistory from_map(const std::map<Node, CycleEdge>& nu);

  /// Adopts an already-grown cycle.
  static InsertionHistory from_cycle(GrowingCycle cycle);

  Node length() const { return cycle_.size(); }

  /// nu(k) for 3 <= k <= length().
  CycleEdge nu(Node k) const;

  /// (nu-(k), nu+(k)) for 1 <= k <= length(), with the fixed values for
  /// k = 1, 2, 3.
  NuPair nu_of(Node k) const;

  /// The node inserted into e at or before time `limit`, if any.
  std::optional<Node> inserter(const CycleEdge& e, Node limit) const;

  /// nu(4..length()).
  std::vector<CycleEdge> insertions() const;

  InsertionHistory prefix(Node n) const;

  const GrowingCycle& cycle() const { return cycle_; }

  friend bool operator==(const InsertionHistory& a, const InsertionHistory& b) {
    return a.insertions() == b.insertions();
  }

 private:
  GrowingCycle cycle_;
};

/// A_n: the canonical tour after replaying h through node n.
Tour replay_history(const InsertionHistory& h, Node n);

/// The unique history whose replay is t. Peels the largest node each round;
/// its two current neighbours are both smaller and form nu(max).
InsertionHistory decode_tour(const Tour& t);

/// Each nu(n), n = 4..N, drawn uniformly from the n - 1 edges present at
/// time n - 1.
template <class Rng>
InsertionHistory sample_uniform_history(Rng& rng, Node length);

/// Uniform integer in [0, bound) built on the raw engine output only, so the
/// sequence is identical on every standard library.
template <class Rng>
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  static_assert(Rng::min() == 0 && Rng::max() == ~std::uint64_t{0},
                "expects a full-range 64-bit engine");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

template <class Rng>
InsertionHistory sample_uniform_history(Rng& rng, Node length) {
  if (length < 3) throw ValidationError("history length must be at least 3", length);
  GrowingCycle cycle(length);
  for (Node n = 4; n <= length; ++n) {
    const auto tail = static_cast<Node>(uniform_below(rng, static_cast<std::uint64_t>(n - 1))) + 1;
    cycle.insert(cycle.edge_from(tail));
  }
  return InsertionHistory::from_cycle(std::move(cycle));
}

}  // namespace pedigree

#endif  // PEDIGREE_HISTORY_HPP
