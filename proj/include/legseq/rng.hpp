#pragma once

#include <cstdint>

namespace legseq {

/// SplitMix64 (Steele, Lea, Flood 2014): state += golden gamma, then a
/// xor-shift-multiply finaliser. Fully specified, so seeded streams are
/// identical on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, bound), rejection sampling; bound > 0.
    std::uint64_t below(std::uint64_t bound) noexcept
    {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t state_;
};

} // namespace legseq
