#pragma once

#include <cstdint>

namespace moncoh {

// Counter-based generator: value k of stream `seed` is splitmix64(seed, k).
class CounterRng {
  public:
    explicit CounterRng(uint64_t seed, uint64_t stream = 0) : seed_(seed ^ (stream * 0xD1B54A32D192ED03ull)) {}

    uint64_t next() { return mix(seed_ + 0x9E3779B97F4A7C15ull * ++counter_); }
    // uniform in [0, n) up to negligible bias for the small n used here
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }
    uint64_t counter() const { return counter_; }

  private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    uint64_t seed_;
    uint64_t counter_ = 0;
};

} // namespace moncoh
