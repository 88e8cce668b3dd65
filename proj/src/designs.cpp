#include "srg/designs.hpp"

#include <algorithm>
#include <stdexcept>

#include "srg/codes.hpp"
#include "srg/geometry.hpp"
#include "srg/oracle.hpp"

namespace srg {

void verify_bibd(IncidenceStructure& d, int k, int lambda) {
    for (const auto& b : d.blocks) {
        if (static_cast<int>(b.size()) != k)
            throw std::logic_error("BIBD check: block size mismatch");
        for (int p : b)
            if (p < 0 || p >= d.v) throw std::logic_error("BIBD check: bad point");
    }
    std::vector<int> pair_count(static_cast<std::size_t>(d.v) * d.v, 0);
    for (const auto& b : d.blocks)
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                ++pair_count[static_cast<std::size_t>(b[i]) * d.v + b[j]];
    for (int x = 0; x < d.v; ++x)
        for (int y = x + 1; y < d.v; ++y)
            if (pair_count[static_cast<std::size_t>(x) * d.v + y] != lambda)
                throw std::logic_error("BIBD check: pair count != lambda");
    d.is_bibd = true;
    d.block_size = k;
    d.pair_lambda = lambda;
}

IncidenceStructure projective_plane(long long q) {
    auto pp = as_prime_power(q);
    if (!pp) throw std::invalid_argument("projective plane order must be a prime power");
    FiniteField f = FiniteField::make(pp->first, pp->second);
    auto pts = projective_points(f, 2);
    IncidenceStructure d;
    d.v = static_cast<int>(pts.size());
    for (const auto& line : pts) {
        std::vector<int> block;
        for (int i = 0; i < d.v; ++i) {
            int s = 0;
            for (int c = 0; c < 3; ++c) s = f.add(s, f.mul(line[c], pts[i][c]));
            if (s == 0) block.push_back(i);
        }
        d.blocks.push_back(std::move(block));
    }
    verify_bibd(d, static_cast<int>(q) + 1, 1);
    return d;
}

IncidenceStructure steiner_triple_system(int v) {
    if (v % 6 != 3 || v < 9)
        throw std::invalid_argument(
            "Bose construction needs v = 3 (mod 6), v >= 9");
    int m = v / 3;  // odd
    auto id = [m](int a, int r) { return a + m * r; };
    int half = (m + 1) / 2;  // inverse of 2 mod m
    IncidenceStructure d;
    d.v = v;
    for (int a = 0; a < m; ++a) d.blocks.push_back({id(a, 0), id(a, 1), id(a, 2)});
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            int mid = static_cast<int>((static_cast<long long>(a + b) * half) % m);
            for (int r = 0; r < 3; ++r)
                d.blocks.push_back({id(a, r), id(b, r), id(mid, (r + 1) % 3)});
        }
    for (auto& b : d.blocks) std::sort(b.begin(), b.end());
    verify_bibd(d, 3, 1);
    return d;
}

IncidenceStructure witt_design_23() {
    LinearCode golay = golay_binary_23();
    IncidenceStructure d;
    d.v = 23;
    for (const auto& word : enumerate_codewords(golay)) {
        int wt = 0;
        for (int s : word) wt += (s != 0);
        if (wt != 7) continue;
        std::vector<int> block;
        for (int i = 0; i < 23; ++i)
            if (word[i]) block.push_back(i);
        d.blocks.push_back(std::move(block));
    }
    verify_bibd(d, 7, 21);
    return d;
}

IncidenceStructure remove_points(const IncidenceStructure& d,
                                 const std::set<int>& removed) {
    IncidenceStructure out;
    out.v = d.v;
    for (const auto& b : d.blocks) {
        bool hit = false;
        for (int p : b)
            if (removed.count(p)) {
                hit = true;
                break;
            }
        if (!hit) out.blocks.push_back(b);
    }
    return out;
}

namespace {

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    // blocks are kept sorted by all constructors here
    int i = 0, j = 0, c = 0;
    while (i < static_cast<int>(a.size()) && j < static_cast<int>(b.size())) {
        if (a[i] < b[j])
            ++i;
        else if (a[i] > b[j])
            ++j;
        else {
            ++c;
            ++i;
            ++j;
        }
    }
    return c;
}

}  // namespace

Graph block_intersection_graph(const IncidenceStructure& d,
                               const std::set<int>& sizes) {
    int b = static_cast<int>(d.blocks.size());
    Graph g(b);
    for (int i = 0; i < b; ++i)
        for (int j = i + 1; j < b; ++j)
            if (sizes.count(intersection_size(d.blocks[i], d.blocks[j])))
                g.set_edge(i, j);
    return g;
}

Graph steiner_graph(const IncidenceStructure& d) {
    if (!d.is_bibd || d.pair_lambda != 1)
        throw std::invalid_argument("steiner_graph needs a verified 2-(v,k,1) design");
    int b = static_cast<int>(d.blocks.size());
    Graph g(b);
    bool any_disjoint = false;
    for (int i = 0; i < b; ++i)
        for (int j = i + 1; j < b; ++j) {
            if (intersection_size(d.blocks[i], d.blocks[j]) > 0)
                g.set_edge(i, j);
            else
                any_disjoint = true;
        }
    if (!any_disjoint)
        throw std::invalid_argument(
            "steiner_graph: every block pair meets (complete graph)");
    return g;
}

OrthogonalArray orthogonal_array(int k, int n) {
    auto pp = as_prime_power(n);
    if (!pp || k > n + 1 || k < 2)
        throw std::invalid_argument(
            "unsupported OA(k,n): only k <= n+1 over prime-power n is implemented");
    FiniteField f = FiniteField::make(pp->first, pp->second);
    OrthogonalArray oa;
    oa.k = k;
    oa.n = n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            std::vector<int> row;
            row.reserve(k);
            row.push_back(x);
            if (k >= 2) row.push_back(y);
            for (int a = 1; a <= k - 2; ++a)
                row.push_back(f.add(f.mul(a, x), y));
            oa.rows.push_back(std::move(row));
        }
    // Exhaustive pairwise-column verification.
    std::vector<char> seen(static_cast<std::size_t>(n) * n);
    for (int c1 = 0; c1 < k; ++c1)
        for (int c2 = 0; c2 < k; ++c2) {
            if (c1 == c2) continue;
            std::fill(seen.begin(), seen.end(), 0);
            for (const auto& row : oa.rows) {
                std::size_t idx = static_cast<std::size_t>(row[c1]) * n + row[c2];
                if (seen[idx]) throw std::logic_error("OA pair property fails");
                seen[idx] = 1;
            }
        }
    return oa;
}

Graph oa_block_graph(const OrthogonalArray& oa) {
    if (oa.k < 2 || oa.k > oa.n)
        throw std::invalid_argument("oa_block_graph needs 2 <= k <= n");
    int m = static_cast<int>(oa.rows.size());
    Graph g(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int agree = 0;
            for (int c = 0; c < oa.k; ++c) agree += (oa.rows[i][c] == oa.rows[j][c]);
            if (agree == 1) g.set_edge(i, j);
        }
    return g;
}

Graph switch_oa_graph(const OrthogonalArray& oa_plus, int c) {
    int k = oa_plus.k - 1;
    int n = oa_plus.n;
    if (k < 2) throw std::invalid_argument("switch_oa_graph needs k+1 >= 3 columns");
    if (c < 1 || c > n) throw std::invalid_argument("class count out of range");
    OrthogonalArray oa;
    oa.k = k;
    oa.n = n;
    for (const auto& row : oa_plus.rows)
        oa.rows.emplace_back(row.begin(), row.begin() + k);
    Graph base = oa_block_graph(oa);
    Graph g = union_with_isolated(base, 1);
    std::vector<int> sw;
    for (int i = 0; i < static_cast<int>(oa_plus.rows.size()); ++i)
        if (oa_plus.rows[i][k] < c) sw.push_back(i);
    sw.push_back(g.order() - 1);
    g = seidel_switch(g, sw);
    if (!is_strongly_regular(g))
        throw std::runtime_error("switch_oa_graph: not an SRG for this (k,n,c)");
    return g;
}

}  // namespace srg
