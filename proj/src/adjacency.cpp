#include "pedigree/adjacency.hpp"

namespace pedigree {

AdjacencyVerdict pedigree_adjacent(const Tour& a, const Tour& b) {
  if (a.size() != b.size())
    throw ValidationError("tours have different node sets: [" + std::to_string(a.size()) + "] vs [" +
                          std::to_string(b.size()) + "]");
  if (a.size() < 4) throw ValidationError("adjacency needs at least 4 nodes");
  if (a == b) throw ValidationError("same vertex: both tours are the same cycle");
  return pedigree_adjacent(decode_tour(a), decode_tour(b));
}

AdjacencyVerdict pedigree_adjacent(const InsertionHistory& a, const InsertionHistory& b) {
  if (a.length() != b.length())
    throw ValidationError("histories have different lengths");
  if (a.length() < 4) throw ValidationError("adjacency needs at least 4 nodes");
  if (a == b) throw ValidationError("same vertex: both histories are identical");
  auto g = build(a, b, a.length());
  const bool connected = g.is_connected();
  return {connected, std::move(g)};
}

}  // namespace pedigree
