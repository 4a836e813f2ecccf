#include <atomic>
#include <cstdlib>
#include <string_view>

#include "lbw/simd.hpp"

namespace lbw::simd {
namespace {

const KernelTable* choose() {
    if (const char* env = std::getenv("LBW_SIMD"); env && std::string_view(env) == "scalar")
        return &scalar_kernels();
    if (const KernelTable* avx2 = avx2_kernels(); avx2 && cpu_has_avx2()) return avx2;
    return &scalar_kernels();
}

std::atomic<const KernelTable*>& slot() {
    static std::atomic<const KernelTable*> current{choose()};
    return current;
}

}  // namespace

const KernelTable& active() { return *slot().load(std::memory_order_relaxed); }

void set_active(const KernelTable& table) { slot().store(&table, std::memory_order_relaxed); }

}  // namespace lbw::simd
