#pragma once

#include <cstdint>
#include <random>

namespace holecov {

/// Seeded stream with a fixed bit-level definition: std::mt19937_64 output
/// mapped to doubles through its top 53 bits. Unlike the standard
/// distributions this mapping is identical across standard libraries.
class SeededStream {
public:
    explicit SeededStream(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    /// Uniform in [0, 1).
    double unit() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * unit(); }

    std::uint64_t bits() noexcept { return engine_(); }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

} // namespace holecov
