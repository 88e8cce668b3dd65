#ifndef SRG_ORACLE_HPP
#define SRG_ORACLE_HPP

#include <optional>

#include "srg/graph.hpp"
#include "srg/params.hpp"

namespace srg {

/// Brute-force strong-regularity decision: checks regularity, then counts
/// common neighbours of every pair as popcount(row_i AND row_j).  Returns
/// the measured (n,k,lambda,mu) when all edge counts agree on lambda and
/// all non-edge counts agree on mu, with 0 < k < n-1; absent otherwise.
/// Degenerate tuples (mu = 0 or mu = k) are reported like any other.
std::optional<SrgParams> is_strongly_regular(const Graph& g);

/// Entrywise recheck of A^2 = kI + lambda*A + mu*(J - I - A) by walking
/// neighbour lists; deliberately avoids the popcount kernels so the two
/// routes stay independent.
bool adjacency_identity_holds(const Graph& g, const SrgParams& p);

struct SrgCertificate {
    SrgParams params;
    bool verified = false;
};

/// Oracle plus the matrix-identity recheck; absent when the oracle rejects.
std::optional<SrgCertificate> certify(const Graph& g);

}  // namespace srg

#endif
