#pragma once

#include <cstdint>
#include <string_view>

namespace gmosa::util {

// splitmix64 step; used both as the generator core and for seed mixing.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic stream, independent of standard-library distributions so that
// runs reproduce bit-for-bit on any platform. All randomness in the project
// flows through explicitly passed Rng instances; there is no global state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64(state_); }

  // Uniform in [0, n); n == 0 yields 0.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  // Uniform in [lo, hi], inclusive. Requires lo <= hi.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi) -
                          static_cast<std::uint64_t>(lo) + 1));
  }

  // Uniform in [0, 1).
  double real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return real() < p; }

  bool flip() { return (next_u64() & 1) != 0; }

 private:
  std::uint64_t state_;
};

// Experiment-cell seed: FNV-1a over "<class>\0<algorithm>\0" and the
// little-endian repetition index, folded into the master seed, then one
// splitmix64 finalization. Stable across platforms and documented in the
// README so individual cells can be reproduced in isolation.
inline std::uint64_t mix_seed(std::uint64_t master_seed,
                              std::string_view class_name,
                              std::string_view algorithm,
                              std::uint64_t repetition) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](unsigned char byte) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  };
  for (char c : class_name) feed(static_cast<unsigned char>(c));
  feed(0);
  for (char c : algorithm) feed(static_cast<unsigned char>(c));
  feed(0);
  for (int i = 0; i < 8; ++i) feed(static_cast<unsigned char>(repetition >> (8 * i)));
  std::uint64_t state = master_seed ^ h;
  return splitmix64(state);
}

}  // namespace gmosa::util
