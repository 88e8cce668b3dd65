#ifndef SRG_GF_HPP
#define SRG_GF_HPP

#include <optional>
#include <utility>
#include <vector>

namespace srg {

/// Exact arithmetic in GF(p^e).  Elements are the integers 0..q-1 read as
/// base-p packed coefficient vectors, little-endian by degree, so element
/// encodings are canonical and match the on-disk code-database format.
/// The modulus is the packed-value-smallest irreducible monic of degree e
/// (verified by trial factorization at construction).
class FiniteField {
public:
    /// Empty field; usable only as a placeholder before assignment.
    FiniteField() = default;

    /// Throws std::invalid_argument unless p is prime, e >= 1 and
    /// p^e <= size_limit (default 2^20).
    static FiniteField make(long long p, int e,
                            long long size_limit = 1 << 20);

    long long p() const { return p_; }
    int e() const { return e_; }
    long long q() const { return q_; }

    /// Modulus coefficients c0..ce, low degree first (empty when e = 1).
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;  // throws on 0
    int pow(int a, long long n) const;

    /// The set {x^2 : x in F*}, sorted; size (q-1)/2 for odd q, q-1 even.
    const std::vector<int>& squares() const { return squares_; }
    bool is_square(int a) const { return a != 0 && square_flag_[a]; }

    /// A fixed generator of the cyclic group F*.
    int generator() const { return generator_; }

private:
    void init_tables();
    int mul_schoolbook(int a, int b) const;

    long long p_ = 0;
    int e_ = 0;
    long long q_ = 0;
    std::vector<int> modulus_;   // trailing coefficient list c0..c_{e}, monic
    std::vector<int> exp_;       // exp_[i] = g^i, i in [0, q-1); empty if big
    std::vector<int> log_;       // inverse of exp_ on F*
    std::vector<int> squares_;
    std::vector<char> square_flag_;
    int generator_ = 0;
};

/// (p, e) with n = p^e, or absent when n is not a prime power (n >= 2).
std::optional<std::pair<long long, int>> as_prime_power(long long n);

bool is_prime(long long n);

}  // namespace srg

#endif
