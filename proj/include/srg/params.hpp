#ifndef SRG_PARAMS_HPP
#define SRG_PARAMS_HPP

#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace srg {

/// Parameter tuple (n, k, lambda, mu).  The counting identity
/// k(k-lambda-1) = (n-k-1)mu ties the four together; identity_holds()
/// also enforces the basic counting bounds 0 < k < n-1, 0 <= lambda < k
/// and mu <= k that any pair count must satisfy.
struct SrgParams {
    long long n = 0;
    long long k = 0;
    long long lambda = 0;
    long long mu = 0;

    bool identity_holds() const {
        return n >= 2 && k > 0 && k < n - 1 && lambda >= 0 && lambda <= k - 1 &&
               mu >= 0 && mu <= k &&
               k * (k - lambda - 1) == (n - k - 1) * mu;
    }
    /// Both the graph and its complement connected (0 < mu < k).
    bool is_primitive() const { return mu > 0 && mu < k; }
    /// Union of cliques (mu = 0) or complete multipartite (mu = k).
    bool is_degenerate() const { return mu == 0 || mu == k; }

    bool operator==(const SrgParams&) const = default;
    auto operator<=>(const SrgParams&) const = default;
};

std::string to_string(const SrgParams& p);

/// mu = k(k-lambda-1)/(n-k-1) when integral, absent otherwise.
std::optional<long long> derive_mu(long long n, long long k, long long lambda);

/// (n, n-k-1, n-2k+mu-2, n-2k+lambda); throws std::invalid_argument when the
/// input fails the identity or the result is out of the 0 < k' < n-1 range.
SrgParams complement_params(const SrgParams& p);

/// Exact spectrum data.  Eigenvalues r,s = ((lambda-mu) +- sqrt(disc))/2;
/// multiplicities are kept as reduced rationals so infeasible inputs can be
/// inspected rather than rounded.  No floating point anywhere.
struct Spectrum {
    long long disc = 0;          // (lambda-mu)^2 + 4(k-mu)
    bool eigen_integral = false; // disc is a perfect square
    long long r = 0, s = 0;      // valid when eigen_integral
    bool conference = false;     // 2k + (n-1)(lambda-mu) == 0
    bool multiplicities_exist = false;
    long long f_num = 0, f_den = 1; // multiplicity of r, reduced
    long long g_num = 0, g_den = 1; // multiplicity of s, reduced
    bool multiplicities_integral() const {
        return multiplicities_exist && f_den == 1 && g_den == 1;
    }
};

/// Throws std::invalid_argument when the identity fails or disc < 0.
Spectrum spectrum(const SrgParams& p);

/// Curated nonexistence records: parameters plus a citation string.
class NonexistenceTable {
public:
    /// File format, one record per line: "n k lambda mu | citation".
    /// '#' starts a comment.  Throws on unreadable/garbled files.
    static NonexistenceTable load(const std::string& path);
    static NonexistenceTable empty() { return NonexistenceTable(); }

    const std::string* find(const SrgParams& p) const;
    std::size_t size() const { return entries_.size(); }

private:
    std::vector<std::pair<SrgParams, std::string>> entries_;
};

enum class FeasibilityRule { None, Identity, Integrality, Krein, AbsoluteBound, Table };

struct FeasibilityVerdict {
    bool infeasible = false;
    FeasibilityRule rule = FeasibilityRule::None;
    std::string detail;
};

const char* rule_name(FeasibilityRule r);

/// Screening pipeline in fixed order: counting identity, eigenvalue and
/// multiplicity integrality (conference tuples must have n = 1 mod 4),
/// Krein conditions, absolute bounds, table lookup.  First failure wins;
/// a tuple passing everything is merely Unsettled (infeasible = false).
FeasibilityVerdict check_feasibility(const SrgParams& p,
                                     const NonexistenceTable& table);

/// Enumerate, in (n, k, lambda) order, every tuple with 4 <= n <= max_n
/// passing identity_holds().  lambda steps are solved modularly so the
/// loop touches only valid tuples.
template <typename Fn>
void for_each_identity_tuple(long long max_n, Fn&& fn) {
    for (long long n = 4; n <= max_n; ++n)
        for (long long k = 1; k <= n - 2; ++k) {
            long long d = n - k - 1;
            long long step = d / std::gcd(k, d);
            for (long long lambda = (k - 1) % step; lambda <= k - 1;
                 lambda += step) {
                long long mu = k * (k - lambda - 1) / d;
                if (mu <= k) fn(SrgParams{n, k, lambda, mu});
            }
        }
}

}  // namespace srg

#endif
