#pragma once

#include <cstdint>

namespace bareqec {

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// xoshiro256** seeded through splitmix64. One instance per shot/worker;
// streams for shot i of subset (s,t) are derived from the master seed by
// hashing, so results do not depend on scheduling or thread count.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  uint64_t next() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // uniform in [0, 1)
  double uniform() { return (next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // uniform integer in [0, bound), bound > 0 (Lemire rejection)
  uint64_t below(uint64_t bound) {
    uint64_t x = next();
    __uint128_t m = (__uint128_t)x * bound;
    uint64_t l = (uint64_t)m;
    if (l < bound) {
      uint64_t t = -bound % bound;
      while (l < t) {
        x = next();
        m = (__uint128_t)x * bound;
        l = (uint64_t)m;
      }
    }
    return (uint64_t)(m >> 64);
  }

  bool bit() { return next() >> 63; }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t s_[4];
};

// Deterministic per-shot stream: mixes a master seed with a task key.
inline uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b, uint64_t c) {
  uint64_t st = master;
  splitmix64(st);
  st ^= 0x632be59bd9b4e019ULL ^ a;
  splitmix64(st);
  st ^= 0xd1b54a32d192ed03ULL ^ b;
  splitmix64(st);
  st ^= 0x8cb92ba72f3d8dd7ULL ^ c;
  return splitmix64(st);
}

inline uint64_t fnv1a64(const void* data, size_t len, uint64_t h = 0xcbf29ce484222325ULL) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; i++) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace bareqec
