#ifndef SRG_FAMILIES_HPP
#define SRG_FAMILIES_HPP

#include "srg/graph.hpp"

namespace srg {

/// J(m,j): vertices are the j-subsets of an m-set in lexicographic order,
/// adjacent when the subsets share j-1 elements.
Graph johnson_graph(int m, int j);

/// Vertices F_q (q = 1 mod 4), x ~ y iff x - y is a nonzero square.
Graph paley_graph(long long q);

/// Vertices are the 280 partitions of a 9-set into three 3-sets; two
/// partitions are adjacent unless their cross-intersection has exactly 7
/// nonempty cells.
Graph mathon_rosa_graph();

}  // namespace srg

#endif
