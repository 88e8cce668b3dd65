#ifndef SRG_POLAR_HPP
#define SRG_POLAR_HPP

#include "srg/geometry.hpp"
#include "srg/graph.hpp"

namespace srg {

/// Isotropic projective points of the standard form of the given kind,
/// adjacent when orthogonal under the associated bilinear form.
Graph polar_graph(QuadraticForm::Kind kind, int dim, long long q);

/// VO^eps_{2d}(q): all vectors of F_q^{2d}, x ~ y iff Q(x-y) = 0, for the
/// standard form of the given sign.  plus = +, minus = -.
Graph affine_polar_graph(QuadraticForm::Kind epsilon, int two_d, long long q);

/// Number of isotropic projective points of the standard form (counted
/// exhaustively; used by matchers and tests).
long long isotropic_point_count(QuadraticForm::Kind kind, int dim, long long q);

}  // namespace srg

#endif
