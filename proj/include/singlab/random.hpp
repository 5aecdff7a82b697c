#pragma once

#include <cstdint>
#include <random>

namespace singlab {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31U);
}

/// Seeded random stream. mt19937_64's output sequence is fixed by the
/// standard, and bounded draws use our own rejection step, so results are
/// identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    /// Independent stream for trial `index` of a run seeded with `seed`.
    static Rng for_trial(std::uint64_t seed, std::uint64_t index) {
        return Rng(splitmix64(seed) ^ splitmix64(index ^ 0xD1B54A32D192ED03ULL));
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound). bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace singlab
