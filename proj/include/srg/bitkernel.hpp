#ifndef SRG_BITKERNEL_HPP
#define SRG_BITKERNEL_HPP

#include <cstddef>
#include <cstdint>

// Bit-vector kernels behind the strong-regularity oracle.  The hot loop of
// the whole library is popcount(row_i AND row_j) over packed adjacency rows,
// so it gets a scalar reference implementation plus an AVX2 variant chosen
// once at startup.  Both must agree bit-for-bit; tests/test_bitkernel.cpp
// checks them against each other on random data.

namespace srg::bitkernel {

enum class Kind { Auto, Scalar, Avx2 };

// Number of set bits in a[0..nwords) AND b[0..nwords).
std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                         std::size_t nwords);

// Number of set bits in a[0..nwords).
std::size_t popcount(const std::uint64_t* a, std::size_t nwords);

// Force a specific kernel (for equivalence tests); Auto re-runs CPU detection.
void select_kernel(Kind kind);

// Kernel currently in use.
Kind active_kernel();

// Scalar reference implementations, always available.
namespace scalar {
std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                         std::size_t nwords);
std::size_t popcount(const std::uint64_t* a, std::size_t nwords);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                         std::size_t nwords);
std::size_t popcount(const std::uint64_t* a, std::size_t nwords);
}  // namespace avx2
#endif

}  // namespace srg::bitkernel

#endif
