#pragma once

#include <cstdint>
#include <random>

namespace lsd {

// splitmix64 step; also used as the mixing function for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent stream seed from a master seed and salt values.
// derive_seed(master, a) != derive_seed(master, b) for a != b in practice.
template <typename... Salts>
std::uint64_t derive_seed(std::uint64_t master, Salts... salts) {
  std::uint64_t s = master;
  (void)std::initializer_list<int>{(s ^= splitmix64(s) + static_cast<std::uint64_t>(salts),
                                    (void)splitmix64(s), 0)...};
  return splitmix64(s);
}

// Seedable stream generator. All randomness in the toolkit flows through this
// wrapper so that runs are reproducible bit-for-bit given a seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  // Uniform in {0, ..., n-1}; n >= 1. Rejection-free modulo bias is irrelevant
  // at the n involved here (tie-breaking among a handful of arms).
  int uniform_int(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace lsd
