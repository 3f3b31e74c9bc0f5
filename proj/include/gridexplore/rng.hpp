#pragma once

#include <cstdint>
#include <string_view>

namespace gridexplore {

// xoshiro256** seeded through splitmix64. Hand-rolled so that streams are
// bit-identical across platforms and standard library versions (std
// distributions are implementation-defined).
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // Unbiased integer in [0, bound). bound must be > 0.
    std::uint64_t uniform_int(std::uint64_t bound);

    // Inclusive range [lo, hi].
    int uniform_range(int lo, int hi);

    // Double in [0, 1) with 53 random bits.
    double uniform_double();

    // Float in [0, 1) with 24 random bits.
    float uniform_float();

  private:
    std::uint64_t s_[4];
};

// Derives an independent substream seed from a root seed, a stream name and
// an index. All randomness in the workbench flows from one 64-bit seed
// through these named substreams.
std::uint64_t substream_seed(std::uint64_t root, std::string_view name,
                             std::uint64_t index = 0);

}  // namespace gridexplore
