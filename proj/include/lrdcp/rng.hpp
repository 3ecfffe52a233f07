#pragma once

#include <cstdint>

namespace lrdcp {

// Counter-based 64-bit generator (splitmix64).  Every output is a strong
// 64->64 mix of seed + i*phi, so a stream is a pure function of (seed,
// counter) and streams derived from (master, index) are reproducible no
// matter which thread or order consumes them.
class rng {
 public:
  explicit rng(std::uint64_t seed) : state_(seed) {}

  // Independent stream for replication `index` under a master seed.
  static rng stream(std::uint64_t master_seed, std::uint64_t index);

  std::uint64_t next_u64();

  // Uniform on the open interval (0,1); 53-bit resolution.
  double next_uniform();

  // Standard normal via inversion of the uniform above.  Deterministic
  // across platforms (no unspecified library distributions involved).
  double next_gaussian();

 private:
  std::uint64_t state_;
};

}  // namespace lrdcp
