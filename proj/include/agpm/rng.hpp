#pragma once

#include <cstdint>

namespace agpm {

// Counter-based generator: every draw is a pure function of (key, counter),
// so parallel streams keyed by (seed, worker, sample) never need coordination
// and replaying a stream is exact.
inline uint64_t mix64(uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

inline uint64_t derive_key(uint64_t seed, uint64_t s1 = 0, uint64_t s2 = 0) {
  uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ull);
  h = mix64(h ^ (s1 + 0xbf58476d1ce4e5b9ull));
  h = mix64(h ^ (s2 + 0x94d049bb133111ebull));
  return h;
}

class CounterRng {
 public:
  explicit CounterRng(uint64_t seed, uint64_t stream1 = 0, uint64_t stream2 = 0)
      : key_(derive_key(seed, stream1, stream2)) {}

  uint64_t next_u64() {
    ctr_ += 0x9e3779b97f4a7c15ull;
    return mix64(key_ ^ ctr_);
  }

  // uniform in [0,1)
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [0,n), n >= 1; Lemire rejection keeps it unbiased
  uint64_t next_below(uint64_t n) {
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
    auto lo = static_cast<uint64_t>(m);
    if (lo < n) {
      uint64_t t = (0 - n) % n;
      while (lo < t) {
        m = static_cast<unsigned __int128>(next_u64()) * n;
        lo = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

 private:
  uint64_t key_;
  uint64_t ctr_ = 0;
};

// Stateless per-edge decision keyed on the unordered pair: both arcs of an
// undirected edge agree without any shared state.
inline bool edge_keep_decision(uint64_t seed, uint32_t u, uint32_t v, double keep_probability) {
  uint32_t a = u < v ? u : v;
  uint32_t b = u < v ? v : u;
  uint64_t h = derive_key(seed, a, b);
  return static_cast<double>(h >> 11) * 0x1.0p-53 < keep_probability;
}

inline uint32_t vertex_color_decision(uint64_t seed, uint32_t v, uint32_t color_count) {
  uint64_t h = derive_key(seed, v, 0x636f6c6f72ull);
  return static_cast<uint32_t>((static_cast<unsigned __int128>(h) * color_count) >> 64);
}

}  // namespace agpm
