#ifndef SRG_CODES_HPP
#define SRG_CODES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srg/geometry.hpp"
#include "srg/gf.hpp"
#include "srg/graph.hpp"
#include "srg/params.hpp"

namespace srg {

/// Linear [length, dim] code over GF(q), generator rows verified linearly
/// independent at construction.
struct LinearCode {
    FiniteField field;
    int length = 0;
    int dim = 0;
    std::vector<std::vector<int>> generator;  // dim rows of `length` elements
};

/// Throws unless the generator has full rank.
LinearCode make_code(FiniteField field, std::vector<std::vector<int>> generator);

/// Quadratic-residue cyclic constructions, verified by full enumeration:
/// the [23,12,7] binary and [11,6,5] ternary Golay codes.
LinearCode golay_binary_23();
LinearCode golay_ternary_11();

/// Generator of the null space; dual dimension length-dim must be positive.
LinearCode dual_code(const LinearCode& c);

/// True when the two codes span the same row space.
bool same_row_space(const LinearCode& a, const LinearCode& b);

/// All q^dim codewords in lexicographic message order.
/// Message digit i (base q, least significant first) multiplies row i.
std::vector<std::vector<int>> enumerate_codewords(const LinearCode& c);

/// Hamming weight -> number of codewords, by full enumeration.
std::map<int, long long> weight_distribution(const LinearCode& c);

/// Vertices = codewords (message order), edge iff wt(x-y) = dist.
/// Bounded to q^dim <= 4096.
Graph code_distance_graph(const LinearCode& c, int dist);

/// Vertices = the 1288 weight-12 words of the binary Golay code, adjacent
/// when their symmetric difference has weight 12.
Graph codeword_support_graph_1288();

struct TwoWeightWitness {
    int w1 = 0, w2 = 0;          // the two nonzero weights, w1 < w2
    long long count1 = 0, count2 = 0;
};

/// Present iff the code takes exactly two nonzero weights (full enumeration).
std::optional<TwoWeightWitness> two_weight_witness(const LinearCode& c);

/// Vertices = codewords, edge iff wt(x-y) = w1 (so degree = count1).  The
/// witness is re-verified.  The w2-adjacency graph is the complement.
Graph two_weight_graph(const LinearCode& c, const TwoWeightWitness& witness);

/// Code whose generator columns are the coordinate vectors of the points;
/// throws when the points do not span the space.
LinearCode code_from_point_set(const FiniteField& f,
                               const std::vector<ProjectivePoint>& points);

struct CodeDbEntry {
    LinearCode code;
    TwoWeightWitness witness;
    SrgParams expected;
    bool adjacency_is_w1 = true;  // false: catalogue k equals count2
    std::string source;           // file name
};

struct CodeDbReport {
    std::vector<CodeDbEntry> entries;
    std::vector<std::string> skipped;  // "file: reason" for rejected inputs
};

/// Reads every *.txt file under `dir` (sorted by name).  File format:
/// header "q l d w1 w2 n k lambda mu", then d generator rows of l elements
/// (integers 0..p-1 for prime fields, base-p coefficient-packed integers
/// for extension fields); '#' starts a comment.  Entries are admitted only
/// after dimension/length/weight/count verification; failures are reported
/// in `skipped`, never silently dropped.  A missing directory yields an
/// empty report.
CodeDbReport load_code_database(const std::string& dir);

}  // namespace srg

#endif
