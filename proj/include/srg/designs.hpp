#ifndef SRG_DESIGNS_HPP
#define SRG_DESIGNS_HPP

#include <set>
#include <string>
#include <vector>

#include "srg/graph.hpp"

namespace srg {

/// Points 0..v-1 plus blocks; when tagged as a 2-(v,k,lambda) design the
/// pair-count condition has been verified exhaustively at construction.
struct IncidenceStructure {
    int v = 0;
    std::vector<std::vector<int>> blocks;
    bool is_bibd = false;
    int block_size = 0;   // k of the 2-design tag
    int pair_lambda = 0;  // lambda of the 2-design tag
};

/// Exhaustive 2-design check; throws std::logic_error on violation and
/// fills in the tag fields.
void verify_bibd(IncidenceStructure& d, int k, int lambda);

/// Points and lines of PG(2,q): a 2-(q^2+q+1, q+1, 1) design.
IncidenceStructure projective_plane(long long q);

/// Bose construction of a Steiner triple system, v = 3 (mod 6).
IncidenceStructure steiner_triple_system(int v);

/// Blocks = supports of the 253 weight-7 words of the binary Golay code;
/// verified as a 2-(23,7,21) design.
IncidenceStructure witt_design_23();

/// Blocks of d avoiding every point in `removed`.
IncidenceStructure remove_points(const IncidenceStructure& d,
                                 const std::set<int>& removed);

/// Vertices = blocks, edge iff the intersection size lies in `sizes`.
Graph block_intersection_graph(const IncidenceStructure& d,
                               const std::set<int>& sizes);

/// Block graph of a 2-(v,k,1) design: edge iff blocks meet.  Throws when
/// every pair of blocks meets (the graph would be complete).
Graph steiner_graph(const IncidenceStructure& d);

/// OA(k,n): n^2 rows, k columns, every ordered symbol pair exactly once in
/// every ordered column pair (verified at construction).
struct OrthogonalArray {
    int k = 0;
    int n = 0;
    std::vector<std::vector<int>> rows;
};

/// MOLS-over-GF(n) construction; n must be a prime power and k <= n+1.
/// Unsupported (k,n) throw with a message that says "unsupported", which is
/// distinct from nonexistence.
OrthogonalArray orthogonal_array(int k, int n);

/// Rows as vertices, edge iff the rows agree in exactly one coordinate.
Graph oa_block_graph(const OrthogonalArray& oa);

/// Seidel-switching construction: drop the last column of `oa_plus` (an
/// OA(k+1,n)), build the OA(k,n) block graph, append one isolated vertex,
/// and switch on it together with the c parallel classes whose dropped-column
/// symbol is < c.  The result is oracle-checked here; a non-SRG outcome
/// throws std::runtime_error ("not an SRG for this (k,n,c)").
Graph switch_oa_graph(const OrthogonalArray& oa_plus, int c);

}  // namespace srg

#endif
