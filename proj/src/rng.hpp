#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace rainbowlab {

// splitmix64 finalizer, used to derive independent stream seeds.
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// mt19937_64 wrapper. All draws go through next_u64/below rather than
// std::uniform_int_distribution, whose output is not portable across standard
// library implementations; reports must be reproducible byte for byte.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Independent stream for (seed, stream_index). Used to split sample space
  // across workers deterministically.
  static Rng for_stream(uint64_t seed, uint64_t stream) {
    return Rng(mix64(seed ^ mix64(stream + 0x51ed2701)));
  }

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, bound). bound must be positive. Modulo bias is irrelevant
  // at the desk scale this library targets.
  uint64_t below(uint64_t bound) { return engine_() % bound; }
  int below_int(int bound) { return static_cast<int>(below(static_cast<uint64_t>(bound))); }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(engine_() >> 11) * (1.0 / 9007199254740992.0); }

  bool chance(double p) { return next_double() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rainbowlab
