// rng.hpp — counter-based splitmix64 streams with deterministic key derivation.
//
// Reproducibility contract: every random decision in this project is a pure
// function of a 64-bit key and a draw counter. Output i of a stream with key k
// is mix64(k + i * kGolden), i starting at 1 (the classic splitmix64 sequence).
// Child keys come from derive(key, index). No libc RNG, no std::shuffle, no
// std::uniform_*_distribution anywhere downstream, so identical seeds give
// bit-identical behavior on every platform.
#pragma once

#include <cstdint>
#include <vector>

namespace gluedtrees::rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
inline constexpr std::uint64_t kDeriveMult = 0xD1B54A32D192ED03ull;

// splitmix64 finalizer
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

// child key for substream `index` under `key`
constexpr std::uint64_t derive(std::uint64_t key, std::uint64_t index) noexcept {
    return mix64(key ^ (kDeriveMult * (index + 1)));
}

class Stream {
public:
    explicit constexpr Stream(std::uint64_t key) noexcept : key_(key) {}

    constexpr std::uint64_t next_u64() noexcept { return mix64(key_ + (++ctr_) * kGolden); }

    // unbiased integer in [0, bound); bound >= 1
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x < threshold);
        return x % bound;
    }

    constexpr double next_double() noexcept { return double(next_u64() >> 11) * 0x1.0p-53; }

    constexpr std::uint64_t key() const noexcept { return key_; }
    constexpr std::uint64_t position() const noexcept { return ctr_; }

private:
    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
};

// uniform permutation of [0, m), Fisher-Yates from the top index down
inline std::vector<std::uint32_t> random_permutation(std::uint32_t m, Stream& s) {
    std::vector<std::uint32_t> p(m);
    for (std::uint32_t i = 0; i < m; ++i) p[i] = i;
    for (std::uint32_t i = m; i > 1; --i) {
        const std::uint64_t j = s.next_below(i);
        std::swap(p[i - 1], p[j]);
    }
    return p;
}

// fixed purpose tags forming the seed tree under a master seed
namespace tag {
inline constexpr std::uint64_t cycle = 1;
inline constexpr std::uint64_t names = 2;
inline constexpr std::uint64_t graphs = 3;
inline constexpr std::uint64_t embeds = 4;
inline constexpr std::uint64_t episode_graph = 5;
inline constexpr std::uint64_t episode_names = 6;
inline constexpr std::uint64_t episode_strategy = 7;
inline constexpr std::uint64_t trees = 8;
inline constexpr std::uint64_t evals = 9;
}  // namespace tag

}  // namespace gluedtrees::rng
