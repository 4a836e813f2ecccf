#pragma once

// Word-array bit kernels with a portable scalar reference and an AVX2 variant
// chosen once at startup. Every kernel operates on `n` 64-bit words.

#include <cstddef>
#include <cstdint>
#include <string_view>

#if defined(__x86_64__) || defined(_M_X64)
#define LBW_SIMD_X86 1
#else
#define LBW_SIMD_X86 0
#endif

namespace lbw::simd {

using Word = std::uint64_t;

struct KernelTable {
    std::string_view name;
    void (*bit_and)(Word* out, const Word* a, const Word* b, std::size_t n);
    void (*bit_or)(Word* out, const Word* a, const Word* b, std::size_t n);
    // out = a & ~b
    void (*bit_andnot)(Word* out, const Word* a, const Word* b, std::size_t n);
    std::size_t (*popcount)(const Word* a, std::size_t n);
    std::size_t (*popcount_and)(const Word* a, const Word* b, std::size_t n);
    bool (*equal)(const Word* a, const Word* b, std::size_t n);
    bool (*intersects)(const Word* a, const Word* b, std::size_t n);
    // a ⊆ b
    bool (*subset)(const Word* a, const Word* b, std::size_t n);
};

const KernelTable& scalar_kernels();

// Null when the binary was built without AVX2 support for this target.
const KernelTable* avx2_kernels();

bool cpu_has_avx2();

// The table in use. Defaults to AVX2 when the CPU reports it, unless the
// environment variable LBW_SIMD=scalar is set.
const KernelTable& active();

// Overrides the active table (tests and benchmarking).
void set_active(const KernelTable& table);

// Below this many words the inline scalar loops in ops:: are used directly;
// the dispatch overhead dominates otherwise.
inline constexpr std::size_t kDispatchMinWords = 4;

namespace ops {

inline void bit_and(Word* out, const Word* a, const Word* b, std::size_t n) {
    if (n >= kDispatchMinWords) return active().bit_and(out, a, b, n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] & b[i];
}

inline void bit_or(Word* out, const Word* a, const Word* b, std::size_t n) {
    if (n >= kDispatchMinWords) return active().bit_or(out, a, b, n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] | b[i];
}

inline void bit_andnot(Word* out, const Word* a, const Word* b, std::size_t n) {
    if (n >= kDispatchMinWords) return active().bit_andnot(out, a, b, n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] & ~b[i];
}

inline std::size_t popcount(const Word* a, std::size_t n) {
    if (n >= kDispatchMinWords) return active().popcount(a, n);
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(__builtin_popcountll(a[i]));
    return c;
}

inline std::size_t popcount_and(const Word* a, const Word* b, std::size_t n) {
    if (n >= kDispatchMinWords) return active().popcount_and(a, b, n);
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
    return c;
}

inline bool equal(const Word* a, const Word* b, std::size_t n) {
    if (n >= kDispatchMinWords) return active().equal(a, b, n);
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

inline bool intersects(const Word* a, const Word* b, std::size_t n) {
    if (n >= kDispatchMinWords) return active().intersects(a, b, n);
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

inline bool subset(const Word* a, const Word* b, std::size_t n) {
    if (n >= kDispatchMinWords) return active().subset(a, b, n);
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

// Not vectorized; mixing is sequential.
inline std::uint64_t hash(const Word* a, std::size_t n) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ n;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t z = a[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        h ^= z ^ (z >> 31);
    }
    return h;
}

}  // namespace ops

}  // namespace lbw::simd
