#include "srg/oracle.hpp"

#include <stdexcept>

#include "srg/bitkernel.hpp"

namespace srg {

std::optional<SrgParams> is_strongly_regular(const Graph& g) {
    int n = g.order();
    if (n < 2) throw std::invalid_argument("oracle needs at least 2 vertices");
    int k;
    if (!g.is_regular(&k)) return std::nullopt;
    if (k <= 0 || k >= n - 1) return std::nullopt;

    // 0 < k < n-1 guarantees at least one edge and one non-edge.
    long long lambda = -1, mu = -1;
    int words = g.words_per_row();
    for (int u = 0; u < n; ++u) {
        const std::uint64_t* ru = g.row(u);
        for (int v = u + 1; v < n; ++v) {
            long long c = static_cast<long long>(
                bitkernel::and_popcount(ru, g.row(v), words));
            long long& want = g.has_edge(u, v) ? lambda : mu;
            if (want < 0)
                want = c;
            else if (want != c)
                return std::nullopt;
        }
    }
    return SrgParams{n, k, lambda, mu};
}

bool adjacency_identity_holds(const Graph& g, const SrgParams& p) {
    int n = g.order();
    if (p.n != n) return false;
    std::vector<std::vector<int>> nbrs(n);
    for (int u = 0; u < n; ++u) nbrs[u] = g.neighbours(u);
    std::vector<long long> walk(n);
    for (int u = 0; u < n; ++u) {
        std::fill(walk.begin(), walk.end(), 0);
        for (int z : nbrs[u])
            for (int v : nbrs[z]) ++walk[v];
        for (int v = 0; v < n; ++v) {
            long long expect;
            if (v == u)
                expect = p.k;
            else if (g.has_edge(u, v))
                expect = p.lambda;
            else
                expect = p.mu;
            if (walk[v] != expect) return false;
        }
    }
    return true;
}

std::optional<SrgCertificate> certify(const Graph& g) {
    auto params = is_strongly_regular(g);
    if (!params) return std::nullopt;
    SrgCertificate cert;
    cert.params = *params;
    cert.verified = adjacency_identity_holds(g, *params);
    return cert;
}

}  // namespace srg
