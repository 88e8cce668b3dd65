#include "srg/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "srg/gf.hpp"

namespace srg {

Graph johnson_graph(int m, int j) {
    if (j < 1 || 2 * j > m || m > 64)
        throw std::invalid_argument("need 1 <= j <= m/2 and m <= 64");
    // j-subsets in lexicographic order, kept as bitmasks for the
    // intersection counts
    std::vector<std::uint64_t> subsets;
    std::vector<int> idx(j);
    for (int i = 0; i < j; ++i) idx[i] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int i : idx) mask |= std::uint64_t{1} << i;
        subsets.push_back(mask);
        int pos = j - 1;
        while (pos >= 0 && idx[pos] == m - j + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < j; ++i) idx[i] = idx[i - 1] + 1;
    }
    int n = static_cast<int>(subsets.size());
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (std::popcount(subsets[a] & subsets[b]) == j - 1) g.set_edge(a, b);
    return g;
}

Graph paley_graph(long long q) {
    if (q % 4 != 1) throw std::invalid_argument("Paley graphs need q = 1 (mod 4)");
    auto pp = as_prime_power(q);
    if (!pp) throw std::invalid_argument("Paley graphs need a prime power");
    FiniteField f = FiniteField::make(pp->first, pp->second);
    int n = static_cast<int>(q);
    Graph g(n);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (f.is_square(f.sub(x, y))) g.set_edge(x, y);
    return g;
}

namespace {

// All partitions of {0..8} into three unordered 3-sets, each stored as
// three bitmasks sorted by lowest element.
std::vector<std::array<std::uint16_t, 3>> nine_set_partitions() {
    std::vector<std::uint16_t> triples;
    for (std::uint16_t mask = 0; mask < (1u << 9); ++mask)
        if (std::popcount(mask) == 3) triples.push_back(mask);
    std::vector<std::array<std::uint16_t, 3>> parts;
    for (auto a : triples) {
        if (!(a & 1)) continue;  // first cell holds element 0
        for (auto b : triples) {
            if (b & a) continue;
            std::uint16_t rest = static_cast<std::uint16_t>(0x1ff & ~a & ~b);
            if (std::popcount(rest) != 3) continue;
            // no double counting: b holds the smallest element not in a
            int low = std::countr_zero(static_cast<unsigned>(0x1ff & ~a));
            if (!(b & (1u << low))) continue;
            parts.push_back({a, b, rest});
        }
    }
    return parts;
}

}  // namespace

Graph mathon_rosa_graph() {
    auto parts = nine_set_partitions();
    int n = static_cast<int>(parts.size());
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int nonempty = 0;
            for (auto a : parts[i])
                for (auto b : parts[j])
                    if (a & b) ++nonempty;
            if (nonempty != 7) g.set_edge(i, j);
        }
    return g;
}

}  // namespace srg
