#include "srg/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace srg {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<long long, int>> as_prime_power(long long n) {
    if (n < 2) return std::nullopt;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        long long m = n;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (m != 1) return std::nullopt;
        return std::make_pair(p, e);
    }
    return std::make_pair(n, 1);  // n itself prime
}

namespace {

using Poly = std::vector<int>;  // coefficients mod p, low degree first

int poly_deg(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i]) return i;
    return -1;
}

// f mod g (g monic), in place arithmetic over Z_p.
Poly poly_mod(Poly f, const Poly& g, long long p) {
    int dg = poly_deg(g);
    for (int i = poly_deg(f); i >= dg; i = poly_deg(f)) {
        int c = f[i];
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) {
            int t = (f[i - dg + j] - c * g[j]) % static_cast<int>(p);
            f[i - dg + j] = t < 0 ? t + static_cast<int>(p) : t;
        }
    }
    return f;
}

bool poly_divides(const Poly& d, const Poly& f, long long p) {
    Poly r = poly_mod(f, d, p);
    return poly_deg(r) < 0;
}

Poly unpack_poly(long long v, long long p, int len) {
    Poly f(len, 0);
    for (int i = 0; i < len && v; ++i) {
        f[i] = static_cast<int>(v % p);
        v /= p;
    }
    return f;
}

bool poly_irreducible(const Poly& f, long long p) {
    int df = poly_deg(f);
    // Trial division by all monic polynomials of degree 1..df/2.
    for (int d = 1; 2 * d <= df; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long low = 0; low < count; ++low) {
            Poly g = unpack_poly(low, p, d + 1);
            g[d] = 1;
            if (poly_divides(g, f, p)) return false;
        }
    }
    return true;
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

FiniteField FiniteField::make(long long p, int e, long long size_limit) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic is not prime");
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > size_limit) throw std::invalid_argument("field size over limit");
    }
    FiniteField f;
    f.p_ = p;
    f.e_ = e;
    f.q_ = q;
    if (e > 1) {
        // Packed-value-smallest irreducible monic of degree e.
        bool found = false;
        for (long long low = 0; low < q && !found; ++low) {
            Poly cand = unpack_poly(low, p, e + 1);
            cand[e] = 1;
            if (poly_irreducible(cand, p)) {
                f.modulus_ = cand;
                found = true;
            }
        }
        if (!found) throw std::logic_error("no irreducible modulus found");
    }
    f.init_tables();
    return f;
}

int FiniteField::add(int a, int b) const {
    if (e_ == 1) {
        long long s = a + b;
        return static_cast<int>(s >= p_ ? s - p_ : s);
    }
    if (p_ == 2) return a ^ b;
    int out = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
        int da = a % static_cast<int>(p_), db = b % static_cast<int>(p_);
        a /= static_cast<int>(p_);
        b /= static_cast<int>(p_);
        int d = da + db;
        if (d >= p_) d -= static_cast<int>(p_);
        out += d * mult;
        mult *= static_cast<int>(p_);
    }
    return out;
}

int FiniteField::neg(int a) const {
    if (e_ == 1) return a ? static_cast<int>(p_) - a : 0;
    if (p_ == 2) return a;
    int out = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
        int da = a % static_cast<int>(p_);
        a /= static_cast<int>(p_);
        out += (da ? static_cast<int>(p_) - da : 0) * mult;
        mult *= static_cast<int>(p_);
    }
    return out;
}

int FiniteField::sub(int a, int b) const { return add(a, neg(b)); }

int FiniteField::mul_schoolbook(int a, int b) const {
    if (e_ == 1)
        return static_cast<int>((static_cast<long long>(a) * b) % p_);
    Poly fa = unpack_poly(a, p_, e_), fb = unpack_poly(b, p_, e_);
    Poly prod(2 * e_ - 1, 0);
    for (int i = 0; i < e_; ++i) {
        if (!fa[i]) continue;
        for (int j = 0; j < e_; ++j)
            prod[i + j] = static_cast<int>(
                (prod[i + j] + static_cast<long long>(fa[i]) * fb[j]) % p_);
    }
    Poly r = poly_mod(std::move(prod), modulus_, p_);
    long long out = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
        out += (i < static_cast<int>(r.size()) ? r[i] : 0) * mult;
        mult *= p_;
    }
    return static_cast<int>(out);
}

int FiniteField::mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) {
        long long s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    return mul_schoolbook(a, b);
}

int FiniteField::inv(int a) const {
    if (a == 0) throw std::invalid_argument("division by zero in GF(q)");
    if (!exp_.empty()) {
        long long l = log_[a];
        return exp_[l == 0 ? 0 : q_ - 1 - l];
    }
    return pow(a, q_ - 2);
}

int FiniteField::pow(int a, long long n) const {
    if (n < 0) return pow(inv(a), -n);
    int result = 1, base = a;
    while (n) {
        if (n & 1) result = mul(result, base);
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

void FiniteField::init_tables() {
    // Find a generator of F* by order tests against the prime factors of q-1.
    auto factors = prime_factors(q_ - 1);
    int gen = 0;
    for (int cand = q_ == 2 ? 1 : 2; cand < q_; ++cand) {
        bool ok = true;
        for (long long pf : factors) {
            // cand^((q-1)/pf) via schoolbook (tables not built yet)
            long long n = (q_ - 1) / pf;
            int r = 1, b = cand;
            while (n) {
                if (n & 1) r = mul_schoolbook(r, b);
                b = mul_schoolbook(b, b);
                n >>= 1;
            }
            if (r == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen = cand;
            break;
        }
    }
    if (gen == 0 && q_ > 2) throw std::logic_error("no generator found");
    generator_ = q_ == 2 ? 1 : gen;

    if (q_ <= (1 << 16)) {
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        int cur = 1;
        for (long long i = 0; i < q_ - 1; ++i) {
            exp_[i] = cur;
            log_[cur] = static_cast<int>(i);
            cur = mul_schoolbook(cur, generator_);
        }
        if (cur != 1) throw std::logic_error("generator order mismatch");
    }

    square_flag_.assign(q_, 0);
    for (int x = 1; x < q_; ++x) square_flag_[mul(x, x)] = 1;
    for (int x = 1; x < q_; ++x)
        if (square_flag_[x]) squares_.push_back(x);
}

}  // namespace srg
