// Searches for projective two-intersection sets as unions of orbits of a
// subgroup of the Singer cycle of PG(d-1,q), and writes any hit as a
// two-weight code data file (the format load_code_database reads).  Each
// candidate is verified through the library's own witness and oracle before
// anything is written.
//
// Usage: twoweight_search q l d w1 w2 n k lambda mu out.txt

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <vector>

#include "srg/codes.hpp"
#include "srg/gf.hpp"
#include "srg/oracle.hpp"

using srg::FiniteField;

namespace {

// F_{q^d} as polynomials over the base field modulo an irreducible of
// degree d (found by trial division).
struct ExtField {
    const FiniteField& base;
    int d;
    std::vector<int> modulus;  // length d+1, monic, low degree first

    using El = std::vector<int>;  // length d, coefficients over the base field

    ExtField(const FiniteField& b, int dd) : base(b), d(dd) {
        long long total = 1;
        for (int i = 0; i < d; ++i) total *= base.q();
        for (long long low = 0;; ++low) {
            if (low >= total) throw std::logic_error("no irreducible modulus");
            std::vector<int> cand(d + 1, 0);
            long long v = low;
            for (int i = 0; i < d; ++i) {
                cand[i] = static_cast<int>(v % base.q());
                v /= base.q();
            }
            cand[d] = 1;
            if (irreducible(cand)) {
                modulus = cand;
                break;
            }
        }
    }

    static int deg(const std::vector<int>& f) {
        for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
            if (f[i]) return i;
        return -1;
    }

    std::vector<int> poly_mod(std::vector<int> f, const std::vector<int>& g) const {
        int dg = deg(g);
        int lead_inv = base.inv(g[dg]);
        for (int i = deg(f); i >= dg; i = deg(f)) {
            int c = base.mul(f[i], lead_inv);
            for (int j = 0; j <= dg; ++j)
                f[i - dg + j] = base.sub(f[i - dg + j], base.mul(c, g[j]));
        }
        return f;
    }

    bool irreducible(const std::vector<int>& f) const {
        int df = deg(f);
        for (int dd = 1; 2 * dd <= df; ++dd) {
            long long cnt = 1;
            for (int i = 0; i < dd; ++i) cnt *= base.q();
            for (long long low = 0; low < cnt; ++low) {
                std::vector<int> g(dd + 1, 0);
                long long v = low;
                for (int i = 0; i < dd; ++i) {
                    g[i] = static_cast<int>(v % base.q());
                    v /= base.q();
                }
                g[dd] = 1;
                if (deg(poly_mod(f, g)) < 0) return false;
            }
        }
        return true;
    }

    El mul(const El& a, const El& b) const {
        std::vector<int> prod(2 * d - 1, 0);
        for (int i = 0; i < d; ++i) {
            if (!a[i]) continue;
            for (int j = 0; j < d; ++j)
                prod[i + j] = base.add(prod[i + j], base.mul(a[i], b[j]));
        }
        prod = poly_mod(std::move(prod), modulus);
        prod.resize(d);
        return prod;
    }

    El one() const {
        El e(d, 0);
        e[0] = 1;
        return e;
    }

    bool is_one(const El& a) const {
        if (a[0] != 1) return false;
        for (int i = 1; i < d; ++i)
            if (a[i]) return false;
        return true;
    }

    El pow(El a, long long n) const {
        El r = one();
        while (n) {
            if (n & 1) r = mul(r, a);
            a = mul(a, a);
            n >>= 1;
        }
        return r;
    }
};

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> out;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

struct Search {
    long long q, l, d, w1, w2;
    srg::SrgParams expected;

    FiniteField base;
    long long qd = 1, N = 0;
    std::vector<ExtField::El> powers;  // gamma^0 .. gamma^{N-1}
    std::vector<char> z;               // z[m]: first coefficient of gamma^m is 0

    bool init() {
        auto pp = srg::as_prime_power(q);
        if (!pp) return false;
        base = FiniteField::make(pp->first, pp->second);
        ExtField ext(base, static_cast<int>(d));
        for (int i = 0; i < d; ++i) qd *= q;
        N = (qd - 1) / (q - 1);

        // primitive element: smallest packed value of full multiplicative order
        auto factors = prime_factors(qd - 1);
        ExtField::El gamma;
        for (long long packed = 1;; ++packed) {
            if (packed >= qd) return false;
            ExtField::El cand(d, 0);
            long long v = packed;
            for (int i = 0; i < d; ++i) {
                cand[i] = static_cast<int>(v % q);
                v /= q;
            }
            bool ok = true;
            for (long long pf : factors)
                if (ext.is_one(ext.pow(cand, (qd - 1) / pf))) {
                    ok = false;
                    break;
                }
            if (ok) {
                gamma = cand;
                break;
            }
        }
        ExtField::El cur = ext.one();
        powers.reserve(N);
        z.assign(N, 0);
        for (long long i = 0; i < N; ++i) {
            powers.push_back(cur);
            z[i] = (cur[0] == 0);
            cur = ext.mul(cur, gamma);
        }
        return true;
    }

    // DFS over unions of t orbits of size m; returns chosen orbit reps.
    std::optional<std::vector<int>> search_orbits(long long m) {
        long long orbits = N / m;
        long long t = l / m;
        int h_hi = static_cast<int>(l - w1), h_lo = static_cast<int>(l - w2);
        // per-orbit hyperplane profiles
        std::vector<std::vector<int>> prof(orbits, std::vector<int>(N, 0));
        for (long long r = 0; r < orbits; ++r)
            for (long long s = 0; s < m; ++s) {
                long long i = r + s * orbits;
                for (long long j = 0; j < N; ++j)
                    prof[r][j] += z[(i + j) % N];
            }
        std::vector<int> cur(N, 0), chosen;
        long long nodes = 0;
        const long long node_cap = 200000000;
        std::optional<std::vector<int>> result;
        auto dfs = [&](auto&& self, long long next, long long left) -> bool {
            if (++nodes > node_cap) return true;  // give up
            if (left == 0) {
                for (long long j = 0; j < N; ++j)
                    if (cur[j] != h_hi && cur[j] != h_lo) return false;
                result = chosen;
                return true;
            }
            for (long long r = next; r + left <= orbits; ++r) {
                bool ok = true;
                for (long long j = 0; j < N; ++j) {
                    cur[j] += prof[r][j];
                    if (cur[j] > h_hi) ok = false;
                }
                if (ok) {
                    chosen.push_back(static_cast<int>(r));
                    if (self(self, r + 1, left - 1)) return true;
                    chosen.pop_back();
                }
                for (long long j = 0; j < N; ++j) cur[j] -= prof[r][j];
            }
            return false;
        };
        dfs(dfs, 0, t);
        return result;
    }
};

}  // namespace

int main(int argc, char** argv) {
    if (argc != 11) {
        std::cerr << "usage: twoweight_search q l d w1 w2 n k lambda mu out.txt\n";
        return 64;
    }
    Search s;
    s.q = std::atoll(argv[1]);
    s.l = std::atoll(argv[2]);
    s.d = std::atoll(argv[3]);
    s.w1 = std::atoll(argv[4]);
    s.w2 = std::atoll(argv[5]);
    s.expected = {std::atoll(argv[6]), std::atoll(argv[7]), std::atoll(argv[8]),
                  std::atoll(argv[9])};
    std::string out_path = argv[10];

    if (!s.init()) {
        std::cerr << "bad field parameters\n";
        return 1;
    }
    if (s.expected.n != s.qd) {
        std::cerr << "n != q^d\n";
        return 1;
    }

    // try orbit sizes from largest (smallest search space) down
    std::vector<long long> sizes;
    for (long long m = s.N; m >= 1; --m)
        if (s.N % m == 0 && s.l % m == 0 && s.l / m <= s.N / m) sizes.push_back(m);

    for (long long m : sizes) {
        std::cerr << "trying orbit size " << m << " (" << (s.l / m) << " of "
                  << (s.N / m) << " orbits)\n";
        auto chosen = s.search_orbits(m);
        if (!chosen) continue;

        // materialize the point set
        long long orbits = s.N / m;
        std::vector<long long> pts;
        for (int r : *chosen)
            for (long long sft = 0; sft < m; ++sft) pts.push_back(r + sft * orbits);
        std::sort(pts.begin(), pts.end());

        // build the code and verify everything before writing
        std::vector<std::vector<int>> gen(s.d, std::vector<int>(s.l));
        for (std::size_t c = 0; c < pts.size(); ++c)
            for (long long r = 0; r < s.d; ++r)
                gen[r][c] = s.powers[pts[c]][r];
        srg::LinearCode code;
        try {
            code = srg::make_code(s.base, gen);
        } catch (const std::exception& ex) {
            std::cerr << "candidate rejected: " << ex.what() << "\n";
            continue;
        }
        auto witness = srg::two_weight_witness(code);
        if (!witness || witness->w1 != s.w1 || witness->w2 != s.w2) {
            std::cerr << "candidate rejected: weights off\n";
            continue;
        }
        srg::Graph g = srg::two_weight_graph(code, *witness);
        if (witness->count1 != s.expected.k) g = srg::complement(g);
        auto cert = srg::certify(g);
        if (!cert || !cert->verified || !(cert->params == s.expected)) {
            std::cerr << "candidate rejected: oracle disagrees with the row\n";
            continue;
        }

        std::ofstream out(out_path);
        out << "# two-weight code found as a union of " << (s.l / m)
            << " Singer-subgroup orbits of size " << m << " in PG(" << (s.d - 1)
            << "," << s.q << ")\n";
        out << s.q << ' ' << s.l << ' ' << s.d << ' ' << s.w1 << ' ' << s.w2
            << ' ' << s.expected.n << ' ' << s.expected.k << ' '
            << s.expected.lambda << ' ' << s.expected.mu << "\n";
        for (long long r = 0; r < s.d; ++r) {
            for (long long c = 0; c < s.l; ++c)
                out << gen[r][c] << (c + 1 == s.l ? '\n' : ' ');
        }
        std::cerr << "ok: wrote " << out_path << "\n";
        return 0;
    }
    std::cerr << "no Singer-orbit union found\n";
    return 2;
}
