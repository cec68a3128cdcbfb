#ifndef MF_RNG_HPP
#define MF_RNG_HPP

#include <cmath>
#include <cstdint>
#include <span>

namespace mf {

// Deterministic 64-bit generator (splitmix64). The standard-library engines
// are portable but the distributions are not, so every draw used by the
// simulator or trainer goes through the explicit helpers below. Identical
// seeds give identical streams on any platform.
class Rng {
 public:
  Rng() = default;
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t state() const { return state_; }
  void set_state(uint64_t s) { state_ = s; }

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Unbiased integer in [0, bound). bound must be >= 1.
  uint64_t uniform_u64(uint64_t bound) {
    const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound + 1) % bound;
    uint64_t v = next_u64();
    while (v > limit) v = next_u64();
    return v % bound;
  }

  int uniform_int(int bound) { return static_cast<int>(uniform_u64(static_cast<uint64_t>(bound))); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Box-Muller without a cached spare so the stream position stays simple.
  double normal() {
    double u1 = uniform_real();
    while (u1 <= 0.0) u1 = uniform_real();
    const double u2 = uniform_real();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  bool bernoulli(double p) { return uniform_real() < p; }

 private:
  uint64_t state_ = 0x853c49e6748fea9bULL;
};

// Mixes words into a derived seed so independent streams (per env, per
// purpose) never alias each other.
inline uint64_t mix_seed(uint64_t a) {
  Rng r(a ^ 0x2545f4914f6cdd1dULL);
  return r.next_u64();
}

inline uint64_t mix_seed(uint64_t a, uint64_t b) {
  Rng r(a);
  uint64_t x = r.next_u64() ^ (b + 0x9e3779b97f4a7c15ULL);
  Rng r2(x);
  return r2.next_u64();
}

inline uint64_t mix_seed(uint64_t a, uint64_t b, uint64_t c) { return mix_seed(mix_seed(a, b), c); }

}  // namespace mf

#endif  // MF_RNG_HPP
