#ifndef PEDIGREE_ADJACENCY_HPP
#define PEDIGREE_ADJACENCY_HPP

#include "pedigree/pedigree_graph.hpp"

namespace pedigree {

struct AdjacencyVerdict {
  bool adjacent = false;
  PedigreeGraph witness;
};

/// Two distinct tours on the same node set [n], n >= 4, are adjacent vertices
/// of the Pedigree polytope iff their pedigree graph G_n is connected.
/// Tours may be given in any rotation or reflection.
AdjacencyVerdict pedigree_adjacent(const Tour& a, const Tour& b);

/// Same test on already-decoded histories of equal length.
AdjacencyVerdict pedigree_adjacent(const InsertionHistory& a, const InsertionHistory& b);

}  // namespace pedigree

#endif  // PEDIGREE_ADJACENCY_HPP
