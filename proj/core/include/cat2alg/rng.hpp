// Deterministic pseudo-random generator for the sampling helpers.
// splitmix64 is fully specified, so seeded runs reproduce across platforms
// and standard library versions; <random> distributions do not promise that.
#pragma once

#include <cstdint>

namespace cat2alg {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Draw from [0, n). n must be positive. The modulo bias is irrelevant
    // here: draws only need to be deterministic and well spread, not
    // statistically uniform.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Draw from [lo, hi] inclusive. Returns long so the result feeds
    // directly into the GMP value types.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

} // namespace cat2alg
