#include "srg/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace srg {

Graph::Graph(int n) : n_(n), stride_((n + 63) / 64), bits_() {
    if (n < 0) throw std::invalid_argument("graph order must be >= 0");
    bits_.assign(static_cast<std::size_t>(n_) * stride_, 0);
}

void Graph::set_edge(int u, int v, bool present) {
    if (u == v) throw std::invalid_argument("no self-loops");
    std::uint64_t mu = std::uint64_t{1} << (v & 63);
    std::uint64_t mv = std::uint64_t{1} << (u & 63);
    if (present) {
        row(u)[v >> 6] |= mu;
        row(v)[u >> 6] |= mv;
    } else {
        row(u)[v >> 6] &= ~mu;
        row(v)[u >> 6] &= ~mv;
    }
}

int Graph::degree(int u) const {
    int d = 0;
    const std::uint64_t* r = row(u);
    for (int w = 0; w < stride_; ++w) d += std::popcount(r[w]);
    return d;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (int u = 0; u < n_; ++u) twice += degree(u);
    return twice / 2;
}

bool Graph::is_regular(int* degree_out) const {
    if (n_ == 0) return true;
    int k = degree(0);
    for (int u = 1; u < n_; ++u)
        if (degree(u) != k) return false;
    if (degree_out) *degree_out = k;
    return true;
}

std::vector<int> Graph::neighbours(int u) const {
    std::vector<int> out;
    const std::uint64_t* r = row(u);
    for (int w = 0; w < stride_; ++w) {
        std::uint64_t word = r[w];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(w * 64 + b);
            word &= word - 1;
        }
    }
    return out;
}

Graph complement(const Graph& g) {
    int n = g.order();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) h.set_edge(u, v);
    h.labels = g.labels;
    return h;
}

Graph seidel_switch(const Graph& g, const std::vector<int>& s) {
    int n = g.order();
    std::vector<char> in_s(n, 0);
    for (int v : s) {
        if (v < 0 || v >= n) throw std::invalid_argument("switch set out of range");
        in_s[v] = 1;
    }
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool e = g.has_edge(u, v);
            if (in_s[u] != in_s[v]) e = !e;
            if (e) h.set_edge(u, v);
        }
    h.labels = g.labels;
    return h;
}

namespace {

// BFS distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.order(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbours(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

}  // namespace

Graph distance_graph(const Graph& g, const std::set<int>& ds) {
    if (ds.empty()) throw std::invalid_argument("empty distance set");
    for (int d : ds)
        if (d <= 0) throw std::invalid_argument("distances must be positive");
    int n = g.order();
    Graph h(n);
    for (int u = 0; u < n; ++u) {
        std::vector<int> dist = bfs_distances(g, u);
        for (int v = 0; v < n; ++v) {
            if (v == u) continue;
            if (dist[v] < 0)
                throw std::invalid_argument("distance_graph: disconnected input");
            if (v > u && ds.count(dist[v])) h.set_edge(u, v);
        }
    }
    h.labels = g.labels;
    return h;
}

Graph descendant(const Graph& g, int v) {
    int n = g.order();
    if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
    Graph switched = seidel_switch(g, g.neighbours(v));
    Graph h(n - 1);
    for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        for (int w = u + 1; w < n; ++w) {
            if (w == v) continue;
            if (switched.has_edge(u, w))
                h.set_edge(u - (u > v), w - (w > v));
        }
    }
    return h;
}

Graph union_with_isolated(const Graph& g, int count) {
    if (count < 0) throw std::invalid_argument("count must be >= 0");
    Graph h(g.order() + count);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) h.set_edge(u, v);
    return h;
}

namespace {

void append_graph6_size(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    } else {
        throw std::invalid_argument("graph6: order too large");
    }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    append_graph6_size(out, n);
    int bitpos = 0;
    int cur = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bitpos == 6) {
                out.push_back(static_cast<char>(63 + cur));
                bitpos = 0;
                cur = 0;
            }
        }
    if (bitpos > 0)
        out.push_back(static_cast<char>(63 + (cur << (6 - bitpos))));
    return out;
}

Graph decode_graph6(const std::string& bytes) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= bytes.size())
            throw std::invalid_argument("graph6: truncated input");
        unsigned char c = static_cast<unsigned char>(bytes[pos++]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };
    long long n;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        long long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
        if (n <= 62) throw std::invalid_argument("graph6: non-canonical size");
    }
    Graph g(static_cast<int>(n));
    long long nbits = n * (n - 1) / 2;
    long long expect_bytes = (nbits + 5) / 6;
    if (static_cast<long long>(bytes.size() - pos) != expect_bytes)
        throw std::invalid_argument("graph6: length mismatch");
    int cur = 0, avail = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (avail == 0) {
                cur = next();
                avail = 6;
            }
            if ((cur >> (avail - 1)) & 1) g.set_edge(i, j);
            --avail;
        }
    if (avail > 0 && (cur & ((1 << avail) - 1)) != 0)
        throw std::invalid_argument("graph6: nonzero padding bits");
    return g;
}

std::string encode_edge_list(const Graph& g) {
    std::ostringstream out;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbours(u))
            if (v > u) out << u << ' ' << v << '\n';
    return out.str();
}

Graph decode_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::pair<int, int>> edges;
    int maxv = -1;
    long long u, v;
    while (in >> u >> v) {
        if (u < 0 || v < 0 || u == v || u > 1000000 || v > 1000000)
            throw std::invalid_argument("edge list: bad pair");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        maxv = std::max(maxv, static_cast<int>(std::max(u, v)));
    }
    if (!in.eof()) throw std::invalid_argument("edge list: parse error");
    Graph g(maxv + 1);
    for (auto [a, b] : edges) g.set_edge(a, b);
    return g;
}

}  // namespace srg
