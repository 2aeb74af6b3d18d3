#pragma once

#include <cstdint>

namespace qq {

// splitmix64: fully specified generator, so identical seeds reproduce identical
// sample streams bit-for-bit on every platform.  Batch b of a run seeded with s
// uses SplitMix(s).split(b); reports quote the root seed.
class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). bound must be > 0. Modulo bias is irrelevant at
    // desk-scale bounds (<< 2^32).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Uniform in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    // Derives an independent stream for batch index b.
    SplitMix split(std::uint64_t b) const {
        SplitMix s(state_ ^ (0x9e3779b97f4a7c15ULL * (b + 1)));
        s.next();
        return s;
    }

private:
    std::uint64_t state_;
};

} // namespace qq
