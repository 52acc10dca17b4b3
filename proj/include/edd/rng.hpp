#pragma once

#include <cstdint>
#include <random>

namespace edd {

// Seeded generator with a platform-independent bounded draw (the mt19937_64
// sequence is pinned by the standard; uniform_int_distribution is not).
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  // Uniform in [0, n), rejection sampled.
  uint64_t below(uint64_t n) {
    if (n == 0) return 0;
    const uint64_t threshold = (0 - n) % n;
    for (;;) {
      uint64_t x = eng_();
      if (x >= threshold) return x % n;
    }
  }

  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // splitmix64 mix of (base, a, b): independent streams per sweep cell.
  static uint64_t derive(uint64_t base, uint64_t a, uint64_t b = 0) {
    uint64_t x = base;
    auto mix = [&x](uint64_t v) {
      x += 0x9e3779b97f4a7c15ULL + v;
      uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return z ^ (z >> 31);
    };
    uint64_t h = mix(a);
    h ^= mix(b + 0x632be59bd9b4e019ULL);
    return h;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace edd
