#pragma once

#include <cstdint>
#include <string_view>

#include "anofol/vec.hpp"

namespace anofol {

// Deterministic sample source (splitmix64). Every code path that needs
// randomness draws from one of these, seeded from the configured seed, so
// identical configurations reproduce identical outputs byte for byte.
class sample_stream {
  public:
    explicit sample_stream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    vec2 next_point() {
        const double x = next_unit();
        const double y = next_unit();
        return {x, y};
    }

    // Uniform integer in [lo, hi].
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

    ivec2 next_ivec(std::int64_t lo, std::int64_t hi) {
        const std::int64_t x = next_int(lo, hi);
        const std::int64_t y = next_int(lo, hi);
        return {x, y};
    }

  private:
    std::uint64_t state_;
};

// Stable per-purpose substream: mixes a label into the seed so adding or
// removing one consumer does not shift the samples seen by the others.
inline sample_stream substream(std::uint64_t seed, std::string_view label) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char ch : label) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ULL;
    }
    return sample_stream(seed ^ h);
}

}  // namespace anofol
