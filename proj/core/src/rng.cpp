#include "spaceprint/rng.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spaceprint/errors.hpp"

namespace spaceprint {

std::uint64_t mix_seed(std::uint64_t value) {
  // splitmix64 finalizer (public domain, Vigna).
  value += 0x9E3779B97F4A7C15ull;
  value = (value ^ (value >> 30)) * 0xBF58476D1CE4E5B9ull;
  value = (value ^ (value >> 27)) * 0x94D049BB133111EBull;
  return value ^ (value >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(mix_seed(seed)) {}

std::uint64_t Rng::next_u64() { return engine_(); }

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi)
    throw InvalidInput("uniform_int range is empty: [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  const std::uint64_t range =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(next_u64());  // full 64-bit span

  // Lemire's unbiased multiply-shift rejection.
  const std::uint64_t reject_below = (0 - range) % range;  // 2^64 mod range
  while (true) {
    const unsigned __int128 m =
        static_cast<unsigned __int128>(next_u64()) * static_cast<unsigned __int128>(range);
    if (static_cast<std::uint64_t>(m) >= reject_below)
      return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) +
                                       static_cast<std::uint64_t>(m >> 64));
  }
}

double Rng::uniform_real() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool Rng::bernoulli(double p) { return uniform_real() < p; }

double Rng::normal(double mean, double stddev) {
  // Box-Muller, cosine branch only; one fresh uniform pair per sample.
  double u1 = 0.0;
  do {
    u1 = uniform_real();
  } while (u1 <= 0.0);
  const double u2 = uniform_real();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  return mean + stddev * radius * std::cos(2.0 * std::numbers::pi * u2);
}

Rng Rng::child(std::uint64_t tag) const {
  return Rng(mix_seed(seed_ ^ mix_seed(tag)));
}

Rng Rng::child(std::uint64_t tag_a, std::uint64_t tag_b) const {
  return child(tag_a).child(tag_b);
}

}  // namespace spaceprint
