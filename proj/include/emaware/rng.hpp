#pragma once

#include <cstdint>

namespace emaware {

/**
 * SplitMix64 (Steele, Lea, Flood 2014; constants from Vigna's reference
 * splitmix64.c). Fixed here so generated traces are byte-identical on every
 * platform; std:: engines and distributions are not used anywhere in
 * trace generation.
 */
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

} // namespace emaware
