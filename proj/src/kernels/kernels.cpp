#include "polycanon/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace polycanon::kernels {

namespace {

bool any_strict_divisor_scalar(const std::uint64_t* gx, const std::uint64_t* gy,
                               std::size_t count, std::uint64_t cx,
                               std::uint64_t cy) {
    for (std::size_t i = 0; i < count; ++i) {
        bool div = ((gx[i] & ~cx) | (gy[i] & ~cy)) == 0;
        bool neq = ((gx[i] ^ cx) | (gy[i] ^ cy)) != 0;
        if (div && neq) return true;
    }
    return false;
}

bool vanishes_on_all_scalar(std::uint64_t sigma, std::uint64_t tau,
                            const std::uint64_t* words, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i)
        if (((sigma & ~words[i]) | (tau & words[i])) == 0) return false;
    return true;
}

constexpr KernelOps kScalar{any_strict_divisor_scalar, vanishes_on_all_scalar,
                            "scalar"};

}  // namespace

const KernelOps& scalar_ops() { return kScalar; }

#if defined(POLYCANON_WITH_AVX2)
const KernelOps* avx2_ops_impl();  // defined in kernels_avx2.cpp

const KernelOps* avx2_ops() {
    return __builtin_cpu_supports("avx2") ? avx2_ops_impl() : nullptr;
}
#else
const KernelOps* avx2_ops() { return nullptr; }
#endif

const KernelOps& active_ops() {
    static const KernelOps* selected = [] {
        const KernelOps* best = avx2_ops();
        if (const char* env = std::getenv("POLYCANON_KERNELS")) {
            if (std::strcmp(env, "scalar") == 0) best = nullptr;
            // "avx2" keeps the detected backend; anything else is ignored
        }
        return best ? best : &kScalar;
    }();
    return *selected;
}

}  // namespace polycanon::kernels
