#ifndef SRG_HADAMARD_HPP
#define SRG_HADAMARD_HPP

#include <optional>
#include <string>
#include <vector>

#include "srg/graph.hpp"

namespace srg {

/// Square matrix with entries in {+1,-1}, or 0 on the diagonal for
/// conference matrices.
class PmOneMatrix {
public:
    PmOneMatrix() = default;
    explicit PmOneMatrix(int order) : m_(order), e_(order * order, 1) {}

    int order() const { return m_; }
    int at(int i, int j) const { return e_[static_cast<std::size_t>(i) * m_ + j]; }
    void set(int i, int j, int v) { e_[static_cast<std::size_t>(i) * m_ + j] = v; }

    bool operator==(const PmOneMatrix&) const = default;

private:
    int m_ = 0;
    std::vector<int> e_;
};

bool is_symmetric(const PmOneMatrix& m);
/// M M^T = order * I, all entries +-1.
bool is_hadamard(const PmOneMatrix& m);
/// Symmetric, zero diagonal, +-1 off-diagonal, M M^T = (order-1) * I.
bool is_conference(const PmOneMatrix& m);

/// Witness of the regular symmetric constant-diagonal property:
/// epsilon and delta with all row sums equal to delta*epsilon*sqrt(order).
struct RshcdWitness {
    int epsilon = 0;   // +1 or -1
    int delta = 0;     // the constant diagonal value
    long long row_sum = 0;
};

/// Full check (symmetry, +-1 entries, constant diagonal, Hadamard product,
/// constant row sums, square order, |row sum| = sqrt(order)); absent when
/// any condition fails.
std::optional<RshcdWitness> rshcd_witness(const PmOneMatrix& m);

/// A verified RSHCD: every constructor below re-checks the witness before
/// returning, never assuming algebra worked out.
struct Rshcd {
    PmOneMatrix mat;
    RshcdWitness witness;
};

/// Kronecker power of [[1,1],[1,-1]]; order 2^e.
PmOneMatrix hadamard_sylvester(int e);
/// Paley type I, order q+1 for prime powers q = 3 (mod 4); additionally
/// satisfies M + M^T = 2I (skew witness), which is verified.
PmOneMatrix hadamard_paley_I(long long q);
/// Paley type II, order 2(q+1) for prime powers q = 1 (mod 4).
PmOneMatrix hadamard_paley_II(long long q);
/// Symmetric conference matrix of order q+1, q = 1 (mod 4) a prime power.
PmOneMatrix conference_paley(long long q);

/// The two order-4 seeds: epsilon = +1 has diagonal +1 and one -1 per row
/// (on the anti-diagonal); epsilon = -1 is J - 2I.
Rshcd rshcd_base4(int epsilon);

/// Kronecker product, re-verified (signs multiply).
Rshcd rshcd_kronecker(const Rshcd& a, const Rshcd& b);

/// Negate all entries between `split` and its complement, per the
/// block-flip identity; requires |split| = order/2 and zero row sums of
/// both diagonal blocks, else throws std::invalid_argument.  The result is
/// a verified RSHCD of opposite epsilon.
Rshcd rshcd_flip(const Rshcd& m, const std::vector<int>& split);

/// Search for a split that makes rshcd_flip applicable: exhaustive for
/// order <= 16, seeded local search above.  Absent when nothing is found.
std::optional<std::vector<int>> find_flip_split(const Rshcd& m);

/// Block rearrangement [[M12, M11], [M11^T, M21]] over the natural half
/// split; returned only when it passes every witness check and its
/// diagonal blocks have zero row sums (i.e. it is flip-eligible).
std::optional<Rshcd> rshcd_twist(const Rshcd& m);

/// Adjacency = [entry != delta]; the result must pass the strong-regularity
/// oracle (a failure would mean a witness bug and throws std::logic_error).
Graph rshcd_to_graph(const Rshcd& m);

/// Graph whose Seidel matrix is the given symmetric zero-diagonal matrix:
/// adjacency at entries equal to -1.
Graph graph_from_seidel(const PmOneMatrix& m);

}  // namespace srg

#endif
