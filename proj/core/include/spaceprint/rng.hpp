#pragma once

#include <cstdint>
#include <random>

namespace spaceprint {

// Seeded random source with implementation-pinned sampling.
//
// mt19937_64 supplies the raw stream, but bounded integers (Lemire rejection)
// and normals (Box-Muller) are derived here rather than through std::
// distributions, whose algorithms vary across standard libraries. Equal seeds
// therefore give byte-equal samples on any conforming toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64();

  // Uniform integer in [lo, hi], both ends inclusive. Throws InvalidInput
  // when lo > hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // Uniform double in [0, 1) with 53 random bits.
  double uniform_real();

  bool bernoulli(double p);  // p clamped to [0, 1]

  double normal(double mean, double stddev);

  // Independent generator derived from this one's seed and a stream tag.
  // Children are a pure function of (seed, tags): deriving the same child
  // twice gives the same stream, and the parent's state is untouched.
  Rng child(std::uint64_t tag) const;
  Rng child(std::uint64_t tag_a, std::uint64_t tag_b) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// splitmix64 step; the mixing function behind seed derivation.
std::uint64_t mix_seed(std::uint64_t value);

}  // namespace spaceprint
