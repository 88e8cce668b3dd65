#include "srg/codes.hpp"

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace srg {

namespace {

// Row-reduce a copy of the matrix over f; returns the rank and (optionally)
// the reduced rows + pivot columns.
int row_reduce(const FiniteField& f, std::vector<std::vector<int>> m,
               std::vector<std::vector<int>>* reduced = nullptr,
               std::vector<int>* pivots = nullptr) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    std::vector<int> piv;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int sel = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col]) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[rank], m[sel]);
        int inv = f.inv(m[rank][col]);
        for (int c = col; c < cols; ++c) m[rank][c] = f.mul(m[rank][c], inv);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || !m[r][col]) continue;
            int factor = m[r][col];
            for (int c = col; c < cols; ++c)
                m[r][c] = f.sub(m[r][c], f.mul(factor, m[rank][c]));
        }
        piv.push_back(col);
        ++rank;
    }
    if (reduced) *reduced = std::move(m);
    if (pivots) *pivots = std::move(piv);
    return rank;
}

long long message_count(const LinearCode& c) {
    long long total = 1;
    for (int i = 0; i < c.dim; ++i) total *= c.field.q();
    return total;
}

int weight_of(const std::vector<int>& word) {
    int w = 0;
    for (int s : word) w += (s != 0);
    return w;
}

// Visit all codewords in lexicographic message order without re-encoding
// from scratch: an odometer over message digits.  Digit values are field
// elements in packed order, so a step from a to b contributes (b-a)*row —
// not necessarily one row, e.g. in GF(4).
template <typename Fn>
void visit_codewords(const LinearCode& c, Fn&& fn) {
    const FiniteField& f = c.field;
    long long total = message_count(c);
    std::vector<int> digits(c.dim, 0);
    std::vector<int> word(c.length, 0);
    auto step_row = [&](int r, int from, int to) {
        int scalar = f.sub(to, from);
        if (!scalar) return;
        for (int i = 0; i < c.length; ++i)
            word[i] = f.add(word[i], f.mul(scalar, c.generator[r][i]));
    };
    for (long long idx = 0;; ++idx) {
        fn(idx, word);
        if (idx + 1 >= total) break;
        int pos = 0;
        while (digits[pos] == f.q() - 1) {
            step_row(pos, digits[pos], 0);
            digits[pos] = 0;
            ++pos;
        }
        step_row(pos, digits[pos], digits[pos] + 1);
        ++digits[pos];
    }
}

}  // namespace

LinearCode make_code(FiniteField field, std::vector<std::vector<int>> generator) {
    LinearCode c;
    c.dim = static_cast<int>(generator.size());
    if (c.dim == 0) throw std::invalid_argument("empty generator");
    c.length = static_cast<int>(generator[0].size());
    for (const auto& row : generator) {
        if (static_cast<int>(row.size()) != c.length)
            throw std::invalid_argument("ragged generator");
        for (int s : row)
            if (s < 0 || s >= field.q())
                throw std::invalid_argument("generator entry out of field range");
    }
    if (row_reduce(field, generator) != c.dim)
        throw std::invalid_argument("generator rows are linearly dependent");
    c.field = std::move(field);
    c.generator = std::move(generator);
    return c;
}

namespace {

// Cyclic quadratic-residue code of length `len` over GF(p): the generator
// polynomial is prod over quadratic residues r of (x - beta^r), computed in
// a splitting field GF(p^m) containing a primitive len-th root of unity.
// Residue closure under multiplication by p keeps the coefficients in the
// prime subfield.
LinearCode quadratic_residue_code(long long p, int len, int splitting_degree) {
    FiniteField big = FiniteField::make(p, splitting_degree);
    long long cofactor = (big.q() - 1) / len;
    int beta = big.pow(big.generator(), cofactor);

    std::vector<char> residue(len, 0);
    for (int r = 1; r < len; ++r) residue[static_cast<int>((1LL * r * r) % len)] = 1;

    // poly = prod (x - beta^r), coefficients in GF(p^m), low degree first
    std::vector<int> poly{1};
    for (int r = 1; r < len; ++r) {
        if (!residue[r]) continue;
        int root = big.pow(beta, r);
        std::vector<int> next(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = big.add(next[i + 1], poly[i]);
            next[i] = big.sub(next[i], big.mul(root, poly[i]));
        }
        poly = std::move(next);
    }
    for (int coeff : poly)
        if (coeff >= p)
            throw std::logic_error("QR generator polynomial not over GF(p)");

    int deg = static_cast<int>(poly.size()) - 1;
    int dim = len - deg;
    FiniteField f = FiniteField::make(p, 1);
    std::vector<std::vector<int>> gen(dim, std::vector<int>(len, 0));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j <= deg; ++j) gen[i][i + j] = poly[j];
    return make_code(std::move(f), std::move(gen));
}

int min_distance(const LinearCode& c) {
    int best = c.length + 1;
    visit_codewords(c, [&](long long idx, const std::vector<int>& w) {
        if (idx == 0) return;
        best = std::min(best, weight_of(w));
    });
    return best;
}

}  // namespace

LinearCode golay_binary_23() {
    LinearCode c = quadratic_residue_code(2, 23, 11);
    if (c.dim != 12 || min_distance(c) != 7)
        throw std::logic_error("binary Golay check failed");
    return c;
}

LinearCode golay_ternary_11() {
    LinearCode c = quadratic_residue_code(3, 11, 5);
    if (c.dim != 6 || min_distance(c) != 5)
        throw std::logic_error("ternary Golay check failed");
    return c;
}

LinearCode dual_code(const LinearCode& c) {
    const FiniteField& f = c.field;
    std::vector<std::vector<int>> reduced;
    std::vector<int> pivots;
    row_reduce(f, c.generator, &reduced, &pivots);
    if (static_cast<int>(pivots.size()) == c.length)
        throw std::invalid_argument("dual of the full space is the zero code");
    std::vector<char> is_pivot(c.length, 0);
    for (int p : pivots) is_pivot[p] = 1;
    std::vector<std::vector<int>> dual;
    for (int free = 0; free < c.length; ++free) {
        if (is_pivot[free]) continue;
        std::vector<int> v(c.length, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = f.neg(reduced[r][free]);
        dual.push_back(std::move(v));
    }
    return make_code(f, std::move(dual));
}

bool same_row_space(const LinearCode& a, const LinearCode& b) {
    if (a.length != b.length || a.dim != b.dim) return false;
    std::vector<std::vector<int>> stacked = a.generator;
    stacked.insert(stacked.end(), b.generator.begin(), b.generator.end());
    return row_reduce(a.field, stacked) == a.dim;
}

std::vector<std::vector<int>> enumerate_codewords(const LinearCode& c) {
    long long total = message_count(c);
    if (total > (1 << 24)) throw std::invalid_argument("code too large to enumerate");
    std::vector<std::vector<int>> out;
    out.reserve(total);
    visit_codewords(c, [&](long long, const std::vector<int>& w) { out.push_back(w); });
    return out;
}

std::map<int, long long> weight_distribution(const LinearCode& c) {
    std::map<int, long long> dist;
    visit_codewords(c, [&](long long, const std::vector<int>& w) {
        ++dist[weight_of(w)];
    });
    return dist;
}

namespace {

// Weight of the codeword of every message, indexed by packed message.
std::vector<int> weight_by_message(const LinearCode& c) {
    std::vector<int> wt(message_count(c));
    visit_codewords(c, [&](long long idx, const std::vector<int>& w) {
        wt[idx] = weight_of(w);
    });
    return wt;
}

// Graph on the message space where adjacency depends only on the weight of
// the difference codeword (translation invariance makes this exact).
Graph difference_weight_graph(const LinearCode& c, int dist) {
    long long total = message_count(c);
    if (total > 4096)
        throw std::invalid_argument("codeword graph limited to 4096 vertices");
    std::vector<int> wt = weight_by_message(c);
    long long q = c.field.q();
    int n = static_cast<int>(total);
    // digit vectors of every message, for difference indexing
    std::vector<std::vector<int>> digits(n, std::vector<int>(c.dim));
    for (int m = 0; m < n; ++m) {
        long long v = m;
        for (int i = 0; i < c.dim; ++i) {
            digits[m][i] = static_cast<int>(v % q);
            v /= q;
        }
    }
    const FiniteField& f = c.field;
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            long long idx = 0, mult = 1;
            for (int i = 0; i < c.dim; ++i) {
                idx += mult * f.sub(digits[a][i], digits[b][i]);
                mult *= q;
            }
            if (wt[idx] == dist) g.set_edge(a, b);
        }
    return g;
}

}  // namespace

Graph code_distance_graph(const LinearCode& c, int dist) {
    if (dist < 0 || dist > c.length) throw std::invalid_argument("bad distance");
    return difference_weight_graph(c, dist);
}

Graph codeword_support_graph_1288() {
    LinearCode golay = golay_binary_23();
    std::vector<std::uint32_t> masks;
    visit_codewords(golay, [&](long long, const std::vector<int>& w) {
        std::uint32_t m = 0;
        int wt = 0;
        for (int i = 0; i < 23; ++i)
            if (w[i]) {
                m |= (1u << i);
                ++wt;
            }
        if (wt == 12) masks.push_back(m);
    });
    int n = static_cast<int>(masks.size());
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::popcount(masks[i] ^ masks[j]) == 12) g.set_edge(i, j);
    return g;
}

std::optional<TwoWeightWitness> two_weight_witness(const LinearCode& c) {
    auto dist = weight_distribution(c);
    dist.erase(0);
    if (dist.size() != 2) return std::nullopt;
    auto it = dist.begin();
    TwoWeightWitness w;
    w.w1 = it->first;
    w.count1 = it->second;
    ++it;
    w.w2 = it->first;
    w.count2 = it->second;
    return w;
}

Graph two_weight_graph(const LinearCode& c, const TwoWeightWitness& witness) {
    auto check = two_weight_witness(c);
    if (!check || check->w1 != witness.w1 || check->w2 != witness.w2 ||
        check->count1 != witness.count1 || check->count2 != witness.count2)
        throw std::invalid_argument("two-weight witness does not match the code");
    return difference_weight_graph(c, witness.w1);
}

LinearCode code_from_point_set(const FiniteField& f,
                               const std::vector<ProjectivePoint>& points) {
    if (points.empty()) throw std::invalid_argument("empty point set");
    int dim = static_cast<int>(points[0].size());
    std::vector<std::vector<int>> gen(dim, std::vector<int>(points.size()));
    for (std::size_t c = 0; c < points.size(); ++c) {
        if (static_cast<int>(points[c].size()) != dim)
            throw std::invalid_argument("ragged point set");
        for (int r = 0; r < dim; ++r) gen[r][c] = points[c][r];
    }
    if (row_reduce(f, gen) != dim)
        throw std::invalid_argument("points do not span the space");
    return make_code(f, std::move(gen));
}

CodeDbReport load_code_database(const std::string& dir) {
    CodeDbReport report;
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) return report;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".txt")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    for (const auto& path : files) {
        std::string name = path.filename().string();
        auto skip = [&](const std::string& why) {
            report.skipped.push_back(name + ": " + why);
        };
        std::ifstream in(path);
        if (!in) {
            skip("cannot open");
            continue;
        }
        std::ostringstream clean;
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            clean << line << '\n';
        }
        std::istringstream data(clean.str());
        long long q, l, d, w1, w2;
        SrgParams expected;
        if (!(data >> q >> l >> d >> w1 >> w2 >> expected.n >> expected.k >>
              expected.lambda >> expected.mu)) {
            skip("bad header");
            continue;
        }
        auto pp = as_prime_power(q);
        if (!pp) {
            skip("q is not a prime power");
            continue;
        }
        std::vector<std::vector<int>> gen(d, std::vector<int>(l));
        bool ok = true;
        for (long long r = 0; r < d && ok; ++r)
            for (long long c = 0; c < l && ok; ++c) {
                long long v;
                if (!(data >> v) || v < 0 || v >= q) ok = false;
                else gen[r][c] = static_cast<int>(v);
            }
        if (!ok) {
            skip("bad generator matrix");
            continue;
        }
        LinearCode code;
        try {
            code = make_code(FiniteField::make(pp->first, pp->second), std::move(gen));
        } catch (const std::exception& ex) {
            skip(ex.what());
            continue;
        }
        long long qd = 1;
        for (long long i = 0; i < d; ++i) qd *= q;
        if (expected.n != qd) {
            skip("catalogue n != q^d");
            continue;
        }
        auto witness = two_weight_witness(code);
        if (!witness) {
            skip("not a two-weight code");
            continue;
        }
        if (witness->w1 != w1 || witness->w2 != w2) {
            skip("weights disagree with header");
            continue;
        }
        CodeDbEntry entry;
        if (witness->count1 == expected.k)
            entry.adjacency_is_w1 = true;
        else if (witness->count2 == expected.k)
            entry.adjacency_is_w1 = false;
        else {
            skip("catalogue k matches neither weight count");
            continue;
        }
        entry.code = std::move(code);
        entry.witness = *witness;
        entry.expected = expected;
        entry.source = name;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace srg
