#pragma once

#include <cstdint>

namespace homsim {

// splitmix64 step; also used to derive per-task seeds from a master seed.
std::uint64_t splitmix64(std::uint64_t& state);

// Deterministic per-index substream seed (independent of thread scheduling).
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index);

// xoshiro256++ with a fully specified output sequence, so results are
// bit-identical across platforms and standard-library versions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next_u64();
    // uniform in [0,1) with 53-bit resolution
    double uniform();

  private:
    std::uint64_t s_[4];
};

}  // namespace homsim
