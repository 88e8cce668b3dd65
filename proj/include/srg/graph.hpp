#ifndef SRG_GRAPH_HPP
#define SRG_GRAPH_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace srg {

/// Undirected simple graph on vertices 0..n-1, adjacency kept as n
/// word-packed bit rows (symmetric, zero diagonal).  Immutable by
/// convention once a construction returns it; all transforms below
/// produce new graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    int words_per_row() const { return stride_; }

    bool has_edge(int u, int v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }
    void set_edge(int u, int v, bool present = true);

    const std::uint64_t* row(int u) const { return bits_.data() + u * stride_; }

    int degree(int u) const;
    long long edge_count() const;
    bool is_regular(int* degree_out = nullptr) const;

    /// Neighbours of u in increasing order.
    std::vector<int> neighbours(int u) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

    /// Optional per-vertex provenance labels (empty when unused).
    std::vector<std::string> labels;

private:
    std::uint64_t* row(int u) { return bits_.data() + u * stride_; }

    int n_ = 0;
    int stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Same vertices, edge iff non-edge.
Graph complement(const Graph& g);

/// Toggle adjacency exactly on pairs split by the subset s.
Graph seidel_switch(const Graph& g, const std::vector<int>& s);

/// Edge iff BFS distance lies in ds.  Throws std::invalid_argument on a
/// disconnected graph or empty ds.
Graph distance_graph(const Graph& g, const std::set<int>& ds);

/// Seidel-switch on the neighbourhood of v (isolating it), then delete v.
Graph descendant(const Graph& g, int v);

/// g plus `count` isolated vertices appended after the existing ones.
Graph union_with_isolated(const Graph& g, int count);

/// graph6 bytes per the de-facto standard (no header, 63-offset ASCII,
/// column-major upper triangle).  decode throws std::invalid_argument on
/// malformed input, including nonzero padding bits.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(const std::string& bytes);

/// Edge-list text "u v\n", 0-based, lexicographically sorted.
std::string encode_edge_list(const Graph& g);
Graph decode_edge_list(const std::string& text);

}  // namespace srg

#endif
