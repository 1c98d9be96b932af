#pragma once

#include <cstdint>

namespace openph::numcore {

/// SplitMix64 pseudorandom stream (Steele/Lea/Flood reference constants).
/// The state walks the Weyl sequence state += 0x9E3779B97F4A7C15 and each
/// output applies the finalizer
///
///   z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9;
///   z ^= z >> 27;  z *= 0x94D049BB133111EB;
///   z ^= z >> 31;
///
/// Pure 64-bit integer arithmetic, so identical seeds give bit-identical
/// sequences on every platform. Not cryptographic.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) built from the top 53 bits of the next output.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

inline double rng_uniform(RngStream& stream) { return stream.uniform(); }

}  // namespace openph::numcore
