#include "srg/bitkernel.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>

// AVX2 popcount via the nibble-LUT (PSHUFB) trick, 4 words per step,
// accumulated with SAD against zero.  Tail words fall back to scalar.

namespace srg::bitkernel::avx2 {

namespace {

inline __m256i popcount256(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2,
                                         3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2,
                                         2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i cnt =
        _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::size_t reduce(__m256i acc) {
    __m128i lo = _mm256_castsi256_si128(acc);
    __m128i hi = _mm256_extracti128_si256(acc, 1);
    __m128i sum = _mm_add_epi64(lo, hi);
    return static_cast<std::size_t>(_mm_cvtsi128_si64(sum)) +
           static_cast<std::size_t>(_mm_extract_epi64(sum, 1));
}

}  // namespace

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                         std::size_t nwords) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount256(_mm256_and_si256(va, vb)));
    }
    std::size_t total = reduce(acc);
    for (; i < nwords; ++i)
        total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

std::size_t popcount(const std::uint64_t* a, std::size_t nwords) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, popcount256(va));
    }
    std::size_t total = reduce(acc);
    for (; i < nwords; ++i)
        total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

}  // namespace srg::bitkernel::avx2

#endif
