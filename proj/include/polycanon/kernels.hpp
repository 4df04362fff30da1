/**
 * @file kernels.hpp
 * @brief Batch kernels over structure-of-arrays support words.
 *
 * Two inner loops dominate the heavier computations: scanning a monomial
 * list for a strict divisor of a candidate (reduction, intersection
 * frontiers, minimality filters) and testing whether a pseudomonomial
 * vanishes on every word of a code. Both run over flat uint64 arrays and
 * are provided as a scalar reference implementation plus an AVX2 variant
 * selected at runtime. Set POLYCANON_KERNELS=scalar|avx2 to force a backend
 * (an unavailable forced backend falls back to scalar).
 */
#pragma once

#include <cstddef>
#include <cstdint>

namespace polycanon::kernels {

struct KernelOps {
    /// Whether some (gx[i], gy[i]) divides (cx, cy) and differs from it.
    bool (*any_strict_divisor)(const std::uint64_t* gx, const std::uint64_t* gy,
                               std::size_t count, std::uint64_t cx,
                               std::uint64_t cy);
    /// Whether the pseudomonomial (sigma, tau) vanishes at every word:
    /// vanishing at w means (sigma & ~w) | (tau & w) != 0.
    bool (*vanishes_on_all)(std::uint64_t sigma, std::uint64_t tau,
                            const std::uint64_t* words, std::size_t count);
    const char* name;
};

/// The scalar reference backend. Always available.
const KernelOps& scalar_ops();

/// The AVX2 backend, or nullptr when not compiled in or not supported.
const KernelOps* avx2_ops();

/// The backend in use (runtime CPU detection, POLYCANON_KERNELS override).
const KernelOps& active_ops();

inline bool any_strict_divisor(const std::uint64_t* gx, const std::uint64_t* gy,
                               std::size_t count, std::uint64_t cx,
                               std::uint64_t cy) {
    return active_ops().any_strict_divisor(gx, gy, count, cx, cy);
}

inline bool vanishes_on_all(std::uint64_t sigma, std::uint64_t tau,
                            const std::uint64_t* words, std::size_t count) {
    return active_ops().vanishes_on_all(sigma, tau, words, count);
}

}  // namespace polycanon::kernels
