#pragma once

#include <cstdint>

namespace relturan {

// splitmix64; all randomized operations in the library draw from this
// generator so results are identical across platforms and standard
// library implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound >= 1, via rejection sampling
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    // uniform in [0, 1)
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Seed for the i-th trial of a run started with `seed`. Trials are a pure
// function of (seed, i), so they can be scheduled in any order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i) {
    SplitMix64 g(seed ^ (0x632be59bd9b4e019ULL * (i + 1)));
    return g.next();
}

}  // namespace relturan
