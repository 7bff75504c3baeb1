#pragma once
// Counter-based random streams built on the splitmix64 mixer. A stream is
// keyed by (seed, suite, check, trial), so Monte Carlo trials can run in any
// order or thread partitioning and still draw identical numbers. Not for
// cryptography.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

#include "octa/octonion.hpp"
#include "octa/quaternion.hpp"

namespace octa {

class Rng {
 public:
  explicit Rng(std::uint64_t key) : key_(key) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  static std::uint64_t hash(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001b3ull;
    }
    return h;
  }

  static Rng derive(std::uint64_t seed, std::string_view suite,
                    std::string_view check, std::uint64_t trial) {
    std::uint64_t k = mix(seed);
    k = mix(k ^ hash(suite));
    k = mix(k ^ hash(check));
    k = mix(k ^ trial);
    return Rng(k);
  }

  std::uint64_t next_u64() { return mix(key_ + 0x632be59bd9b4e019ull * ++ctr_); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Box-Muller; draws two uniforms per call and discards the sine partner,
  // keeping the stream position independent of call history.
  double normal() {
    double u = uniform01();
    while (u == 0.0) u = uniform01();
    const double v = uniform01();
    return std::sqrt(-2.0 * std::log(u)) *
           std::cos(2.0 * std::numbers::pi * v);
  }

  Quaternion normal_quaternion() {
    return {normal(), normal(), normal(), normal()};
  }

  Quaternion unit_quaternion() { return normalized(normal_quaternion()); }

  Octonion normal_octonion() {
    Octonion o{};
    for (int s = 0; s < 8; ++s) o.c[s] = normal();
    return o;
  }

  Octonion unit_octonion() { return normalized(normal_octonion()); }

  Octonion unit_imaginary_octonion() {
    Octonion o = normal_octonion();
    o.c[0] = 0.0;
    return normalized(o);
  }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

}  // namespace octa
