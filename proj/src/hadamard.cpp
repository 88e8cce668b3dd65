#include "srg/hadamard.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "srg/gf.hpp"
#include "srg/oracle.hpp"

namespace srg {

bool is_symmetric(const PmOneMatrix& m) {
    for (int i = 0; i < m.order(); ++i)
        for (int j = i + 1; j < m.order(); ++j)
            if (m.at(i, j) != m.at(j, i)) return false;
    return true;
}

namespace {

bool product_is_scaled_identity(const PmOneMatrix& m, long long scale) {
    int n = m.order();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            long long dot = 0;
            for (int k = 0; k < n; ++k) dot += m.at(i, k) * m.at(j, k);
            if (dot != (i == j ? scale : 0)) return false;
        }
    return true;
}

}  // namespace

bool is_hadamard(const PmOneMatrix& m) {
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j)
            if (m.at(i, j) != 1 && m.at(i, j) != -1) return false;
    return product_is_scaled_identity(m, m.order());
}

bool is_conference(const PmOneMatrix& m) {
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j) {
            int v = m.at(i, j);
            if (i == j ? v != 0 : (v != 1 && v != -1)) return false;
        }
    return is_symmetric(m) && product_is_scaled_identity(m, m.order() - 1);
}

std::optional<RshcdWitness> rshcd_witness(const PmOneMatrix& m) {
    int n = m.order();
    if (n == 0) return std::nullopt;
    if (!is_symmetric(m) || !is_hadamard(m)) return std::nullopt;
    int delta = m.at(0, 0);
    for (int i = 1; i < n; ++i)
        if (m.at(i, i) != delta) return std::nullopt;
    long long sum0 = 0;
    for (int j = 0; j < n; ++j) sum0 += m.at(0, j);
    for (int i = 1; i < n; ++i) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += m.at(i, j);
        if (s != sum0) return std::nullopt;
    }
    long long root = 0;
    while (root * root < n) ++root;
    if (root * root != n) return std::nullopt;
    if (sum0 != root && sum0 != -root) return std::nullopt;
    RshcdWitness w;
    w.delta = delta;
    w.row_sum = sum0;
    w.epsilon = (sum0 == delta * root) ? 1 : -1;
    return w;
}

PmOneMatrix hadamard_sylvester(int e) {
    if (e < 0) throw std::invalid_argument("negative Sylvester exponent");
    PmOneMatrix h(1);
    for (int step = 0; step < e; ++step) {
        int n = h.order();
        PmOneMatrix next(2 * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int v = h.at(i, j);
                next.set(i, j, v);
                next.set(i, j + n, v);
                next.set(i + n, j, v);
                next.set(i + n, j + n, -v);
            }
        h = std::move(next);
    }
    if (!is_hadamard(h)) throw std::logic_error("Sylvester check failed");
    return h;
}

namespace {

// chi(a_i - a_j) over GF(q), the quadratic-character (Jacobsthal) matrix.
std::vector<std::vector<int>> jacobsthal(long long q) {
    auto pp = as_prime_power(q);
    if (!pp) throw std::invalid_argument("q must be a prime power");
    FiniteField f = FiniteField::make(pp->first, pp->second);
    int n = static_cast<int>(q);
    std::vector<std::vector<int>> Q(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Q[i][j] = f.is_square(f.sub(i, j)) ? 1 : -1;
        }
    return Q;
}

}  // namespace

PmOneMatrix hadamard_paley_I(long long q) {
    if (q % 4 != 3) throw std::invalid_argument("Paley I needs q = 3 (mod 4)");
    auto Q = jacobsthal(q);
    int n = static_cast<int>(q) + 1;
    PmOneMatrix h(n);
    h.set(0, 0, 1);
    for (int j = 1; j < n; ++j) {
        h.set(0, j, 1);
        h.set(j, 0, -1);
    }
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            h.set(i, j, i == j ? 1 : Q[i - 1][j - 1]);
    if (!is_hadamard(h)) throw std::logic_error("Paley I product check failed");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (h.at(i, j) + h.at(j, i) != (i == j ? 2 : 0))
                throw std::logic_error("Paley I skew check failed");
    return h;
}

PmOneMatrix conference_paley(long long q) {
    if (q % 4 != 1) throw std::invalid_argument("Paley conference needs q = 1 (mod 4)");
    auto Q = jacobsthal(q);
    int n = static_cast<int>(q) + 1;
    PmOneMatrix c(n);
    c.set(0, 0, 0);
    for (int j = 1; j < n; ++j) {
        c.set(0, j, 1);
        c.set(j, 0, 1);
    }
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            c.set(i, j, i == j ? 0 : Q[i - 1][j - 1]);
    if (!is_conference(c)) throw std::logic_error("conference product check failed");
    return c;
}

PmOneMatrix hadamard_paley_II(long long q) {
    if (q % 4 != 1) throw std::invalid_argument("Paley II needs q = 1 (mod 4)");
    PmOneMatrix c = conference_paley(q);
    int n = c.order();
    PmOneMatrix h(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int v = c.at(i, j);
            if (i == j) {
                // I (x) [[1,-1],[-1,-1]]
                h.set(2 * i, 2 * j, 1);
                h.set(2 * i, 2 * j + 1, -1);
                h.set(2 * i + 1, 2 * j, -1);
                h.set(2 * i + 1, 2 * j + 1, -1);
            } else {
                // C (x) [[1,1],[1,-1]]
                h.set(2 * i, 2 * j, v);
                h.set(2 * i, 2 * j + 1, v);
                h.set(2 * i + 1, 2 * j, v);
                h.set(2 * i + 1, 2 * j + 1, -v);
            }
        }
    if (!is_hadamard(h)) throw std::logic_error("Paley II product check failed");
    return h;
}

namespace {

Rshcd verified_rshcd(PmOneMatrix m, const char* what) {
    auto w = rshcd_witness(m);
    if (!w) throw std::logic_error(std::string(what) + ": witness check failed");
    return Rshcd{std::move(m), *w};
}

}  // namespace

Rshcd rshcd_base4(int epsilon) {
    PmOneMatrix m(4);
    if (epsilon == 1) {
        for (int i = 0; i < 4; ++i) m.set(i, 3 - i, -1);
    } else if (epsilon == -1) {
        for (int i = 0; i < 4; ++i) m.set(i, i, -1);
    } else {
        throw std::invalid_argument("epsilon must be +-1");
    }
    Rshcd r = verified_rshcd(std::move(m), "rshcd_base4");
    if (r.witness.epsilon != epsilon)
        throw std::logic_error("rshcd_base4: sign mismatch");
    return r;
}

Rshcd rshcd_kronecker(const Rshcd& a, const Rshcd& b) {
    int na = a.mat.order(), nb = b.mat.order();
    PmOneMatrix m(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l)
                    m.set(i * nb + k, j * nb + l, a.mat.at(i, j) * b.mat.at(k, l));
    Rshcd r = verified_rshcd(std::move(m), "rshcd_kronecker");
    if (r.witness.epsilon != a.witness.epsilon * b.witness.epsilon ||
        r.witness.delta != a.witness.delta * b.witness.delta)
        throw std::logic_error("rshcd_kronecker: sign algebra mismatch");
    return r;
}

Rshcd rshcd_flip(const Rshcd& m, const std::vector<int>& split) {
    int n = m.mat.order();
    std::vector<char> in_s(n, 0);
    for (int v : split) {
        if (v < 0 || v >= n || in_s[v])
            throw std::invalid_argument("flip split is not a valid subset");
        in_s[v] = 1;
    }
    if (static_cast<int>(split.size()) * 2 != n)
        throw std::invalid_argument("flip needs a half split");
    for (int i = 0; i < n; ++i) {
        long long s = 0;
        for (int j = 0; j < n; ++j)
            if (in_s[j] == in_s[i]) s += m.mat.at(i, j);
        if (s != 0)
            throw std::invalid_argument(
                "flip precondition fails: diagonal block row sums are not 0");
    }
    PmOneMatrix t = m.mat;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (in_s[i] != in_s[j]) t.set(i, j, -t.at(i, j));
    Rshcd r = verified_rshcd(std::move(t), "rshcd_flip");
    if (r.witness.epsilon != -m.witness.epsilon ||
        r.witness.delta != m.witness.delta)
        throw std::logic_error("rshcd_flip: sign change mismatch");
    return r;
}

std::optional<std::vector<int>> find_flip_split(const Rshcd& m) {
    int n = m.mat.order();
    if (n % 2) return std::nullopt;
    int half = n / 2;
    auto block_sums_zero = [&](const std::vector<char>& in_s) {
        for (int i = 0; i < n; ++i) {
            long long s = 0;
            for (int j = 0; j < n; ++j)
                if (in_s[j] == in_s[i]) s += m.mat.at(i, j);
            if (s != 0) return false;
        }
        return true;
    };
    if (n <= 16) {
        std::vector<int> idx(half);
        for (int i = 0; i < half; ++i) idx[i] = i;
        while (true) {
            std::vector<char> in_s(n, 0);
            for (int v : idx) in_s[v] = 1;
            if (block_sums_zero(in_s)) return std::vector<int>(idx);
            // next combination
            int i = half - 1;
            while (i >= 0 && idx[i] == n - half + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < half; ++j) idx[j] = idx[j - 1] + 1;
        }
        return std::nullopt;
    }
    // Seeded local search on larger orders: swap vertices between sides to
    // reduce the number of nonzero block row sums.
    std::mt19937 rng(0xC0FFEE);
    std::vector<int> side(n);
    auto violations = [&](const std::vector<int>& sd) {
        int bad = 0;
        for (int i = 0; i < n; ++i) {
            long long s = 0;
            for (int j = 0; j < n; ++j)
                if (sd[j] == sd[i]) s += m.mat.at(i, j);
            if (s != 0) ++bad;
        }
        return bad;
    };
    for (int restart = 0; restart < 32; ++restart) {
        for (int i = 0; i < n; ++i) side[i] = i < half;
        std::shuffle(side.begin(), side.end(), rng);
        int cur = violations(side);
        for (int iter = 0; iter < 4000 && cur > 0; ++iter) {
            int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
            if (side[a] == side[b]) continue;
            std::swap(side[a], side[b]);
            int next = violations(side);
            if (next <= cur)
                cur = next;
            else
                std::swap(side[a], side[b]);
        }
        if (cur == 0) {
            std::vector<int> out;
            for (int i = 0; i < n; ++i)
                if (side[i]) out.push_back(i);
            return out;
        }
    }
    return std::nullopt;
}

std::optional<Rshcd> rshcd_twist(const Rshcd& m) {
    int n = m.mat.order();
    if (n % 2) return std::nullopt;
    int h = n / 2;
    // M12 must be symmetric for M' to be; checked, not assumed.
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j)
            if (m.mat.at(i, h + j) != m.mat.at(j, h + i)) return std::nullopt;
    PmOneMatrix t(n);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            t.set(i, j, m.mat.at(i, h + j));          // M12
            t.set(i, h + j, m.mat.at(i, j));          // M11
            t.set(h + i, j, m.mat.at(j, i));          // M11^T
            t.set(h + i, h + j, m.mat.at(h + i, j));  // M21
        }
    auto w = rshcd_witness(t);
    if (!w) return std::nullopt;
    // flip-eligibility: both diagonal blocks of M' have zero row sums
    for (int i = 0; i < n; ++i) {
        long long s = 0;
        int base = i < h ? 0 : h;
        for (int j = base; j < base + h; ++j) s += t.at(i, j);
        if (s != 0) return std::nullopt;
    }
    return Rshcd{std::move(t), *w};
}

Graph rshcd_to_graph(const Rshcd& m) {
    int n = m.mat.order();
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.mat.at(i, j) != m.witness.delta) g.set_edge(i, j);
    if (!is_strongly_regular(g))
        throw std::logic_error("rshcd_to_graph: oracle rejected the graph");
    return g;
}

Graph graph_from_seidel(const PmOneMatrix& m) {
    if (!is_symmetric(m)) throw std::invalid_argument("Seidel matrix must be symmetric");
    int n = m.order();
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        if (m.at(i, i) != 0)
            throw std::invalid_argument("Seidel matrix needs a zero diagonal");
        for (int j = i + 1; j < n; ++j) {
            if (m.at(i, j) != 1 && m.at(i, j) != -1)
                throw std::invalid_argument("Seidel matrix entries must be +-1");
            if (m.at(i, j) == -1) g.set_edge(i, j);
        }
    }
    return g;
}

}  // namespace srg
