#include "srg/params.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace srg {

std::string to_string(const SrgParams& p) {
    std::ostringstream out;
    out << '(' << p.n << ',' << p.k << ',' << p.lambda << ',' << p.mu << ')';
    return out.str();
}

std::optional<long long> derive_mu(long long n, long long k, long long lambda) {
    if (k <= 0 || k >= n - 1) return std::nullopt;
    long long num = k * (k - lambda - 1);
    long long den = n - k - 1;
    if (num < 0 || num % den != 0) return std::nullopt;
    return num / den;
}

SrgParams complement_params(const SrgParams& p) {
    if (!p.identity_holds())
        throw std::invalid_argument("complement_params: identity fails for " +
                                    to_string(p));
    SrgParams c{p.n, p.n - p.k - 1, p.n - 2 * p.k + p.mu - 2,
                p.n - 2 * p.k + p.lambda};
    if (c.k <= 0 || c.k >= c.n - 1 || c.lambda < 0 || c.mu < 0)
        throw std::invalid_argument("complement_params: result out of range for " +
                                    to_string(p));
    return c;
}

namespace {

long long isqrt_ll(long long x) {
    if (x < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

void reduce(long long& num, long long& den) {
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

// Value a + b*sqrt(D) with exact sign tests; D >= 0 fixed per computation.
struct Surd {
    __int128 a = 0;
    __int128 b = 0;
    long long D = 0;

    Surd operator+(const Surd& o) const { return {a + o.a, b + o.b, D}; }
    Surd operator-(const Surd& o) const { return {a - o.a, b - o.b, D}; }
    Surd operator*(const Surd& o) const {
        return {a * o.a + b * o.b * D, a * o.b + b * o.a, D};
    }
    // sign of a + b*sqrt(D)
    int sign() const {
        int sa = a > 0 ? 1 : (a < 0 ? -1 : 0);
        __int128 bd2 = b * b * D;
        int sb = bd2 > 0 ? (b > 0 ? 1 : -1) : 0;
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        __int128 a2 = a * a;
        if (a2 == bd2) return 0;
        return (a2 > bd2) ? sa : sb;
    }
};

Surd from_int(long long v, long long D) { return {v, 0, D}; }

}  // namespace

Spectrum spectrum(const SrgParams& p) {
    if (!p.identity_holds())
        throw std::invalid_argument("spectrum: identity fails for " + to_string(p));
    Spectrum sp;
    long long a = p.lambda - p.mu;
    sp.disc = a * a + 4 * (p.k - p.mu);
    if (sp.disc < 0)
        throw std::invalid_argument("spectrum: negative discriminant for " +
                                    to_string(p));
    long long e = isqrt_ll(sp.disc);
    sp.eigen_integral = (e * e == sp.disc);
    if (sp.eigen_integral) {
        sp.r = (a + e) / 2;
        sp.s = (a - e) / 2;
    }
    long long t = 2 * p.k + (p.n - 1) * a;
    sp.conference = (t == 0);
    if (sp.conference) {
        sp.multiplicities_exist = true;
        sp.f_num = p.n - 1;
        sp.f_den = 2;
        sp.g_num = p.n - 1;
        sp.g_den = 2;
        reduce(sp.f_num, sp.f_den);
        reduce(sp.g_num, sp.g_den);
    } else if (sp.eigen_integral && e > 0) {
        // f,g = ((n-1) -+ t/e) / 2 as exact rationals with denominator 2e.
        sp.multiplicities_exist = true;
        sp.f_num = (p.n - 1) * e - t;
        sp.f_den = 2 * e;
        sp.g_num = (p.n - 1) * e + t;
        sp.g_den = 2 * e;
        reduce(sp.f_num, sp.f_den);
        reduce(sp.g_num, sp.g_den);
    } else {
        // Irrational eigenvalues force f = g, i.e. the conference case;
        // anything else has no consistent multiplicities at all.
        sp.multiplicities_exist = false;
    }
    return sp;
}

NonexistenceTable NonexistenceTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open nonexistence table: " + path);
    NonexistenceTable t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto bar = line.find('|');
        std::string head = bar == std::string::npos ? line : line.substr(0, bar);
        std::string cite = bar == std::string::npos ? "" : line.substr(bar + 1);
        std::istringstream hs(head);
        SrgParams p;
        if (!(hs >> p.n >> p.k >> p.lambda >> p.mu))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": bad record");
        auto first = cite.find_first_not_of(" \t");
        auto last = cite.find_last_not_of(" \t\r");
        cite = first == std::string::npos ? "" : cite.substr(first, last - first + 1);
        t.entries_.emplace_back(p, cite);
    }
    return t;
}

const std::string* NonexistenceTable::find(const SrgParams& p) const {
    for (const auto& [q, cite] : entries_)
        if (q == p) return &cite;
    return nullptr;
}

const char* rule_name(FeasibilityRule r) {
    switch (r) {
        case FeasibilityRule::None: return "none";
        case FeasibilityRule::Identity: return "identity";
        case FeasibilityRule::Integrality: return "integrality";
        case FeasibilityRule::Krein: return "krein";
        case FeasibilityRule::AbsoluteBound: return "absolute-bound";
        case FeasibilityRule::Table: return "table";
    }
    return "?";
}

FeasibilityVerdict check_feasibility(const SrgParams& p,
                                     const NonexistenceTable& table) {
    auto fail = [&](FeasibilityRule rule, const std::string& detail) {
        return FeasibilityVerdict{true, rule, detail};
    };

    if (!p.identity_holds())
        return fail(FeasibilityRule::Identity,
                    "counting identity k(k-lambda-1) = (n-k-1)mu fails for " +
                        to_string(p));
    // The complement's pair counts n-2k+mu-2 and n-2k+lambda are counting
    // quantities too; negative values kill the tuple outright.
    if (p.n - 2 * p.k + p.mu - 2 < 0 || p.n - 2 * p.k + p.lambda < 0)
        return fail(FeasibilityRule::Identity,
                    "complement counting bounds fail for " + to_string(p));

    Spectrum sp = spectrum(p);
    if (sp.conference) {
        if (p.n % 4 != 1)
            return fail(FeasibilityRule::Integrality,
                        "conference parameters need n = 1 (mod 4)");
    } else if (!sp.eigen_integral) {
        return fail(FeasibilityRule::Integrality,
                    "irrational eigenvalues outside the conference case");
    } else if (!sp.multiplicities_integral()) {
        return fail(FeasibilityRule::Integrality,
                    "eigenvalue multiplicities are not integers");
    }

    // Krein conditions, evaluated exactly with R = 2r, S = 2s = (lambda-mu)
    // -+ sqrt(disc); both inequalities are multiplied through by 8.
    {
        long long D = sp.disc;
        long long a = p.lambda - p.mu;
        Surd R{a, 1, D}, S{a, -1, D};
        Surd two = from_int(2, D), k2 = from_int(2 * p.k, D);
        Surd lhs1 = (R + two) * (k2 + R + R * S) * two;
        Surd rhs1 = (k2 + R) * (S + two) * (S + two);
        if ((lhs1 - rhs1).sign() > 0)
            return fail(FeasibilityRule::Krein,
                        "(r+1)(k+r+2rs) > (k+r)(s+1)^2");
        Surd lhs2 = (S + two) * (k2 + S + R * S) * two;
        Surd rhs2 = (k2 + S) * (R + two) * (R + two);
        if ((lhs2 - rhs2).sign() > 0)
            return fail(FeasibilityRule::Krein,
                        "(s+1)(k+s+2rs) > (k+s)(r+1)^2");
    }

    // Absolute bounds n <= f(f+3)/2 and n <= g(g+3)/2.  Both branches above
    // guarantee integral multiplicities by this point.  The bound only holds
    // for primitive parameters: clique unions and complete multipartite
    // graphs (mu = 0 or mu = k) are not covered by it and are fully decided
    // by the integrality step.
    if (p.is_primitive()) {
        long long f = sp.f_num, g = sp.g_num;
        if (2 * p.n > f * (f + 3))
            return fail(FeasibilityRule::AbsoluteBound, "n > f(f+3)/2");
        if (2 * p.n > g * (g + 3))
            return fail(FeasibilityRule::AbsoluteBound, "n > g(g+3)/2");
    }

    if (const std::string* cite = table.find(p))
        return fail(FeasibilityRule::Table,
                    cite->empty() ? "curated nonexistence record" : *cite);

    return FeasibilityVerdict{};
}

}  // namespace srg
