#include "lbw/simd.hpp"

namespace lbw::simd {
namespace {

void and_scalar(Word* out, const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] & b[i];
}

void or_scalar(Word* out, const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] | b[i];
}

void andnot_scalar(Word* out, const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] & ~b[i];
}

std::size_t popcount_scalar(const Word* a, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(__builtin_popcountll(a[i]));
    return c;
}

std::size_t popcount_and_scalar(const Word* a, const Word* b, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
    return c;
}

bool equal_scalar(const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool intersects_scalar(const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

bool subset_scalar(const Word* a, const Word* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{
        "scalar",          and_scalar,   or_scalar,         andnot_scalar, popcount_scalar,
        popcount_and_scalar, equal_scalar, intersects_scalar, subset_scalar,
    };
    return table;
}

}  // namespace lbw::simd
