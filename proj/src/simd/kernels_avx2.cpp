#include "lbw/simd.hpp"

#if LBW_SIMD_X86
#include <immintrin.h>

#define LBW_AVX2 __attribute__((target("avx2,popcnt")))

namespace lbw::simd {
namespace {

inline LBW_AVX2 __m256i load(const Word* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline LBW_AVX2 void store(Word* p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// Nibble lookup popcount, accumulated per 64-bit lane with vpsadbw.
inline LBW_AVX2 __m256i popcount_lanes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline LBW_AVX2 std::size_t horizontal_sum(__m256i acc) {
    return static_cast<std::size_t>(_mm256_extract_epi64(acc, 0)) +
           static_cast<std::size_t>(_mm256_extract_epi64(acc, 1)) +
           static_cast<std::size_t>(_mm256_extract_epi64(acc, 2)) +
           static_cast<std::size_t>(_mm256_extract_epi64(acc, 3));
}

LBW_AVX2 void and_avx2(Word* out, const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(out + i, _mm256_and_si256(load(a + i), load(b + i)));
    for (; i < n; ++i) out[i] = a[i] & b[i];
}

LBW_AVX2 void or_avx2(Word* out, const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(out + i, _mm256_or_si256(load(a + i), load(b + i)));
    for (; i < n; ++i) out[i] = a[i] | b[i];
}

LBW_AVX2 void andnot_avx2(Word* out, const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    // _mm256_andnot_si256(x, y) computes ~x & y
    for (; i + 4 <= n; i += 4) store(out + i, _mm256_andnot_si256(load(b + i), load(a + i)));
    for (; i < n; ++i) out[i] = a[i] & ~b[i];
}

LBW_AVX2 std::size_t popcount_avx2(const Word* a, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_epi64(acc, popcount_lanes(load(a + i)));
    std::size_t c = horizontal_sum(acc);
    for (; i < n; ++i) c += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
    return c;
}

LBW_AVX2 std::size_t popcount_and_avx2(const Word* a, const Word* b, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(load(a + i), load(b + i))));
    std::size_t c = horizontal_sum(acc);
    for (; i < n; ++i) c += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & b[i]));
    return c;
}

LBW_AVX2 bool equal_avx2(const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_xor_si256(load(a + i), load(b + i));
        if (!_mm256_testz_si256(x, x)) return false;
    }
    for (; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

LBW_AVX2 bool intersects_avx2(const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        if (!_mm256_testz_si256(load(a + i), load(b + i))) return true;
    for (; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

LBW_AVX2 bool subset_avx2(const Word* a, const Word* b, std::size_t n) {
    std::size_t i = 0;
    // testc(b, a) is 1 iff (~b & a) == 0
    for (; i + 4 <= n; i += 4)
        if (!_mm256_testc_si256(load(b + i), load(a + i))) return false;
    for (; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

}  // namespace

const KernelTable* avx2_kernels() {
    static const KernelTable table{
        "avx2",          and_avx2,   or_avx2,         andnot_avx2, popcount_avx2,
        popcount_and_avx2, equal_avx2, intersects_avx2, subset_avx2,
    };
    return &table;
}

bool cpu_has_avx2() {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
}

}  // namespace lbw::simd

#else

namespace lbw::simd {

const KernelTable* avx2_kernels() { return nullptr; }

bool cpu_has_avx2() { return false; }

}  // namespace lbw::simd

#endif
