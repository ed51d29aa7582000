#pragma once

#include <cstdint>

namespace descm {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over std::mt19937 +
// std::uniform_real_distribution because the distribution adapters are
// implementation-defined; this generator produces the same stream on
// every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform on [0, 1) with 53 bits of mantissa
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) {
        return a + (b - a) * next_double();
    }

    // uniform on {0, 1, ..., n-1}; modulo bias is irrelevant for the
    // tiny n used here, determinism is what matters
    std::uint64_t uniform_int(std::uint64_t n) {
        return next_u64() % n;
    }

private:
    std::uint64_t state_;
};

// Per-index substream seed: one SplitMix64 output taken from the state
// master + (index+1)*golden-gamma. Index i always maps to the same seed
// regardless of evaluation order.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 g(master + (index + 1) * 0x9e3779b97f4a7c15ull);
    return g.next_u64();
}

} // namespace descm
