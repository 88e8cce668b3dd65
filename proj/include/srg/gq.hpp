#ifndef SRG_GQ_HPP
#define SRG_GQ_HPP

#include <vector>

#include "srg/geometry.hpp"
#include "srg/graph.hpp"

namespace srg {

/// Generalized quadrangle of order (s,t): lines of size s+1, t+1 lines per
/// point, and for every non-incident point/line pair exactly one line
/// through the point meeting the line.  verify_gq checks all of that
/// exhaustively and throws on violation.
struct GeneralizedQuadrangle {
    int s = 0;
    int t = 0;
    int num_points = 0;
    std::vector<std::vector<int>> lines;  // sorted point lists
};

void verify_gq(const GeneralizedQuadrangle& gq);

/// AS(q) for odd prime-power q: GQ(q-1, q+1) on the q^3 points of AG(3,q).
/// Lines are the axis-parallel classes x=const resp. y=const together with
/// the twisted conics (c*s^2 - b*s + a, -2*c*s + b, s).
GeneralizedQuadrangle gq_ahrens_szekeres(long long q);

/// T2*(O) for even q from a verified hyperoval O in the plane X3 = 0 of
/// PG(3,q): points are the affine points X3 = 1, lines the affine lines
/// whose direction lies in O.  GQ(q-1, q+1).
GeneralizedQuadrangle gq_t2_star(const FiniteField& f,
                                 const std::vector<ProjectivePoint>& oval);

/// Collinearity graph on the points.
Graph gq_point_graph(const GeneralizedQuadrangle& gq);

/// Points and lines swapped: GQ(t,s).
GeneralizedQuadrangle gq_dual(const GeneralizedQuadrangle& gq);

}  // namespace srg

#endif
