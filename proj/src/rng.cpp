#include "lrdcp/rng.hpp"

#include "lrdcp/normal.hpp"

namespace lrdcp {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// Stafford's "Mix13" finalizer, as used in splitmix64.
std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace

rng rng::stream(std::uint64_t master_seed, std::uint64_t index) {
  return rng(mix(master_seed ^ mix(index + kGolden)));
}

std::uint64_t rng::next_u64() {
  state_ += kGolden;
  return mix(state_);
}

double rng::next_uniform() {
  // (k + 1/2) / 2^53 for k in [0, 2^53): strictly inside (0,1).
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double rng::next_gaussian() { return normal_quantile(next_uniform()); }

}  // namespace lrdcp
