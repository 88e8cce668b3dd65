#include "srg/bitkernel.hpp"

#include <bit>

namespace srg::bitkernel {

namespace scalar {

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                         std::size_t nwords) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < nwords; ++i)
        total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

std::size_t popcount(const std::uint64_t* a, std::size_t nwords) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < nwords; ++i)
        total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

}  // namespace scalar

namespace {

using AndPopFn = std::size_t (*)(const std::uint64_t*, const std::uint64_t*,
                                 std::size_t);
using PopFn = std::size_t (*)(const std::uint64_t*, std::size_t);

struct Dispatch {
    AndPopFn and_pop = &scalar::and_popcount;
    PopFn pop = &scalar::popcount;
    Kind kind = Kind::Scalar;
};

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Dispatch detect() {
    Dispatch d;
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_available()) {
        d.and_pop = &avx2::and_popcount;
        d.pop = &avx2::popcount;
        d.kind = Kind::Avx2;
    }
#endif
    return d;
}

Dispatch& dispatch() {
    static Dispatch d = detect();
    return d;
}

}  // namespace

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b,
                         std::size_t nwords) {
    return dispatch().and_pop(a, b, nwords);
}

std::size_t popcount(const std::uint64_t* a, std::size_t nwords) {
    return dispatch().pop(a, nwords);
}

void select_kernel(Kind kind) {
    switch (kind) {
        case Kind::Auto:
            dispatch() = detect();
            break;
        case Kind::Scalar:
            dispatch() = Dispatch{};
            break;
        case Kind::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            if (avx2_available()) {
                dispatch() = Dispatch{&avx2::and_popcount, &avx2::popcount,
                                      Kind::Avx2};
                return;
            }
#endif
            dispatch() = Dispatch{};
            break;
    }
}

Kind active_kernel() { return dispatch().kind; }

}  // namespace srg::bitkernel
