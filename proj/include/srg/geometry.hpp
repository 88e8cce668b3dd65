#ifndef SRG_GEOMETRY_HPP
#define SRG_GEOMETRY_HPP

#include <vector>

#include "srg/gf.hpp"

namespace srg {

/// Point of PG(d, q): nonzero coordinate vector normalized so the first
/// nonzero coordinate is 1.  Canonical, so equality is vector equality.
using ProjectivePoint = std::vector<int>;

ProjectivePoint normalize_projective(const FiniteField& f,
                                     std::vector<int> coords);

/// All (q^{d+1}-1)/(q-1) canonical points of PG(d, q), enumerated
/// leading-position first, then lexicographically by the free suffix.
std::vector<ProjectivePoint> projective_points(const FiniteField& f, int d);

/// Quadratic (or alternating bilinear) form on F_q^dim in one of the four
/// standard shapes.  eval() is the form value; bilinear() polarizes
/// quadratic kinds and evaluates the symplectic form directly.
class QuadraticForm {
public:
    enum class Kind { Plus, Minus, Parabolic, Symplectic };

    static QuadraticForm standard(Kind kind, int dim, const FiniteField& f);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    const FiniteField& field() const { return field_; }

    int eval(const std::vector<int>& x) const;
    int bilinear(const std::vector<int>& x, const std::vector<int>& y) const;
    bool isotropic(const std::vector<int>& x) const;

private:
    QuadraticForm(Kind kind, int dim, FiniteField f)
        : kind_(kind), dim_(dim), field_(std::move(f)) {}

    Kind kind_;
    int dim_;
    FiniteField field_;
    // Upper-triangular coefficients of the quadratic form (unused for
    // symplectic, which is evaluated from its pairing pattern).
    std::vector<std::vector<int>> coeff_;
};

/// The regular hyperoval {(1:t:t^2)} + {(0:1:0), (0:0:1)} in PG(2,q),
/// q = 2^e; every line meets it in 0 or 2 points (verified).  Throws for
/// odd q.
std::vector<ProjectivePoint> hyperoval(const FiniteField& f);

}  // namespace srg

#endif
