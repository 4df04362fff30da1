#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <vector>

#include "polycanon/kernels.hpp"

using namespace polycanon::kernels;

namespace {

bool naive_any_strict_divisor(const std::vector<std::uint64_t>& gx,
                              const std::vector<std::uint64_t>& gy,
                              std::uint64_t cx, std::uint64_t cy) {
    for (std::size_t i = 0; i < gx.size(); ++i) {
        bool divides = (gx[i] & ~cx) == 0 && (gy[i] & ~cy) == 0;
        bool equal = gx[i] == cx && gy[i] == cy;
        if (divides && !equal) return true;
    }
    return false;
}

bool naive_vanishes_on_all(std::uint64_t sigma, std::uint64_t tau,
                           const std::vector<std::uint64_t>& words) {
    for (std::uint64_t w : words)
        if (((sigma & ~w) | (tau & w)) == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("scalar kernels match the naive definitions") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::uint64_t> mask(0, (1u << 12) - 1);
    std::uniform_int_distribution<int> len(0, 40);
    const KernelOps& ops = scalar_ops();

    for (int t = 0; t < 3000; ++t) {
        int count = len(rng);
        std::vector<std::uint64_t> gx, gy, words;
        for (int i = 0; i < count; ++i) {
            gx.push_back(mask(rng));
            gy.push_back(mask(rng));
            words.push_back(mask(rng));
        }
        std::uint64_t cx = mask(rng), cy = mask(rng);
        // Make divisor hits likely: sometimes copy a row into the candidate.
        if (count > 0 && t % 3 == 0) {
            cx |= gx[static_cast<std::size_t>(t) % count];
            cy |= gy[static_cast<std::size_t>(t) % count];
        }
        CHECK(ops.any_strict_divisor(gx.data(), gy.data(), gx.size(), cx, cy) ==
              naive_any_strict_divisor(gx, gy, cx, cy));
        CHECK(ops.vanishes_on_all(cx & ~cy, cy & ~cx, words.data(),
                                  words.size()) ==
              naive_vanishes_on_all(cx & ~cy, cy & ~cx, words));
    }
}

TEST_CASE("avx2 kernels agree with scalar on every batch shape") {
    const KernelOps* simd = avx2_ops();
    if (simd == nullptr) {
        MESSAGE("avx2 backend not available on this host; skipping");
        return;
    }
    const KernelOps& ref = scalar_ops();
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<std::uint64_t> mask(0, ~std::uint64_t{0});

    // Sweep counts through and past the 4-lane blocks to cover the tails.
    for (std::size_t count = 0; count <= 21; ++count) {
        for (int t = 0; t < 400; ++t) {
            std::vector<std::uint64_t> gx, gy, words;
            for (std::size_t i = 0; i < count; ++i) {
                gx.push_back(mask(rng) & mask(rng));
                gy.push_back(mask(rng) & mask(rng));
                words.push_back(mask(rng));
            }
            std::uint64_t cx = mask(rng) & mask(rng);
            std::uint64_t cy = mask(rng) & mask(rng);
            if (count > 0 && t % 2 == 0) {
                cx |= gx[t % count];
                cy |= gy[t % count];
            }
            CHECK(simd->any_strict_divisor(gx.data(), gy.data(), count, cx, cy) ==
                  ref.any_strict_divisor(gx.data(), gy.data(), count, cx, cy));
            std::uint64_t sigma = cx & ~cy, tau = cy & ~cx;
            CHECK(simd->vanishes_on_all(sigma, tau, words.data(), count) ==
                  ref.vanishes_on_all(sigma, tau, words.data(), count));
        }
    }
}

TEST_CASE("active backend is one of the registered implementations") {
    const KernelOps& ops = active_ops();
    CHECK((ops.name == std::string("scalar") || ops.name == std::string("avx2")));
    CHECK(ops.any_strict_divisor != nullptr);
    CHECK(ops.vanishes_on_all != nullptr);
}
