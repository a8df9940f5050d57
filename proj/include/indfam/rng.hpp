#pragma once

#include <cstdint>

namespace indfam {

// splitmix64 (Steele, Lea, Flood).  Every random draw in the project flows
// from one configured seed through this generator; no std:: distributions
// are used, so byte streams are identical across platforms and compilers.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // true with probability permille/1000
    bool chance_permille(int permille) {
        return next() % 1000 < static_cast<std::uint64_t>(permille);
    }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Deterministic sub-stream derivation: suites tag each grid cell / trial so
// instances are independent of evaluation order.
inline SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t tag) {
    SplitMix64 g(seed ^ (0xA0761D6478BD642FULL * (tag + 1)));
    g.next();
    return g;
}

} // namespace indfam
