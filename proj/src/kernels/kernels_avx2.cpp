// AVX2 variants of the batch kernels. This translation unit is compiled with
// -mavx2 and only ever entered after a runtime cpu-support check.
#include <immintrin.h>

#include "polycanon/kernels.hpp"

namespace polycanon::kernels {

namespace {

bool any_strict_divisor_avx2(const std::uint64_t* gx, const std::uint64_t* gy,
                             std::size_t count, std::uint64_t cx,
                             std::uint64_t cy) {
    const __m256i vcx = _mm256_set1_epi64x(static_cast<long long>(cx));
    const __m256i vcy = _mm256_set1_epi64x(static_cast<long long>(cy));
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(gx + i));
        __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(gy + i));
        __m256i rem = _mm256_or_si256(_mm256_andnot_si256(vcx, vx),
                                      _mm256_andnot_si256(vcy, vy));
        __m256i dif = _mm256_or_si256(_mm256_xor_si256(vx, vcx),
                                      _mm256_xor_si256(vy, vcy));
        // divisor lane: rem == 0; strict: dif != 0
        __m256i div = _mm256_cmpeq_epi64(rem, zero);
        __m256i eq = _mm256_cmpeq_epi64(dif, zero);
        __m256i hit = _mm256_andnot_si256(eq, div);
        if (!_mm256_testz_si256(hit, hit)) return true;
    }
    for (; i < count; ++i) {
        bool div = ((gx[i] & ~cx) | (gy[i] & ~cy)) == 0;
        bool neq = ((gx[i] ^ cx) | (gy[i] ^ cy)) != 0;
        if (div && neq) return true;
    }
    return false;
}

bool vanishes_on_all_avx2(std::uint64_t sigma, std::uint64_t tau,
                          const std::uint64_t* words, std::size_t count) {
    const __m256i vs = _mm256_set1_epi64x(static_cast<long long>(sigma));
    const __m256i vt = _mm256_set1_epi64x(static_cast<long long>(tau));
    const __m256i zero = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256i w = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
        __m256i val = _mm256_or_si256(_mm256_andnot_si256(w, vs),
                                      _mm256_and_si256(vt, w));
        // a zero lane is a word the pseudomonomial does not vanish at
        __m256i nonvanish = _mm256_cmpeq_epi64(val, zero);
        if (!_mm256_testz_si256(nonvanish, nonvanish)) return false;
    }
    for (; i < count; ++i)
        if (((sigma & ~words[i]) | (tau & words[i])) == 0) return false;
    return true;
}

constexpr KernelOps kAvx2{any_strict_divisor_avx2, vanishes_on_all_avx2, "avx2"};

}  // namespace

const KernelOps* avx2_ops_impl() { return &kAvx2; }

}  // namespace polycanon::kernels
