#pragma once

#include <cstdint>
#include <random>

namespace hhd {

/// Seeded random source with a fixed normal-variate recipe (Box-Muller over
/// mt19937_64) so that streams are reproducible independently of the
/// standard library's distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal variate.
    double normal();

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Stable mix of a base seed with stream coordinates, for per-cell seeding
/// of benchmark grids (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

}  // namespace hhd
