// Counter-based pseudo-random streams.
//
// A stream is keyed by (seed, tag); the tag is hashed into the key so draws
// for different distributions never share a subsequence even under the same
// seed. Word i is a pure function of (key, i) (the SplitMix64 output
// function; Steele, Lea and Flood 2014), so a stream can be replayed or
// split freely and there is no global state anywhere.

#ifndef MLGT_RNG_HPP
#define MLGT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <string_view>

#include "mlgt/numeric_util.hpp"

namespace mlgt {

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// FNV-1a, used only to fold the tag into the stream key.
inline std::uint64_t hash_tag(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace detail

class RngStream {
 public:
  RngStream(std::uint64_t seed, std::string_view tag)
      : key_(detail::mix64(seed ^ detail::mix64(detail::hash_tag(tag)))) {}

  std::uint64_t next_u64() {
    counter_ += 0x9E3779B97F4A7C15ull;
    return detail::mix64(key_ ^ counter_);
  }

  // Open interval (0,1); endpoints are never returned.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double next_exponential() { return -std::log(next_uniform()); }

  // Box-Muller; the sine partner is kept for the next call.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double r = std::sqrt(2.0 * next_exponential());
    double a = 2.0 * kPi * next_uniform();
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // Fair sign bit.
  double next_sign() { return (next_u64() & 1u) ? 1.0 : -1.0; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace mlgt

#endif  // MLGT_RNG_HPP
