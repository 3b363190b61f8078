#pragma once

// Reproducible random streams. Each (seed, stream, trial) triple gets its own
// std::mt19937_64 seeded through splitmix64, so results do not depend on the
// order in which trials run. Uniform reals use the top 53 bits explicitly
// instead of std::uniform_real_distribution, whose output is unspecified.

#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

#include "ellhyp/numeric.hpp"

namespace ellhyp {

inline constexpr std::string_view kRngAlgorithm = "mt19937_64/splitmix64-substreams/53bit-uniform";

constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// FNV-1a, used to turn identity ids into stream numbers.
constexpr std::uint64_t stream_id(std::string_view name) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) noexcept {
  std::uint64_t state = seed;
  std::uint64_t mixed = splitmix64(state) ^ stream;
  mixed = splitmix64(mixed) ^ trial;
  return splitmix64(mixed);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) : engine_(substream_seed(seed, stream, trial)) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  /// Modulus uniform in [lo, hi], phase uniform in [0, 2 pi).
  Complex<double> polar(double lo, double hi) {
    const double mod = uniform(lo, hi);
    const double phase = uniform(0.0, 2 * std::numbers::pi);
    return std::polar(mod, phase);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ellhyp
