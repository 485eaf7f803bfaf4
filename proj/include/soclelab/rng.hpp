#pragma once

#include <cstdint>

#include "soclelab/field.hpp"

namespace soclelab {

// splitmix64: deterministic across platforms, unlike the standard library
// distribution adaptors.  Reports quote the seed so every sampled ideal can
// be regenerated bit-exactly.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  uint64_t below(uint64_t n) { return n ? next() % n : 0; }

  Coeff coeff(const Field& f) {
    if (f.is_prime_field())
      return f.from_int(static_cast<int64_t>(
          below(static_cast<uint64_t>(f.characteristic()))));
    // small integers keep rational Groebner runs tame
    return f.from_int(static_cast<int64_t>(below(41)) - 20);
  }

  Coeff nonzero_coeff(const Field& f) {
    for (;;) {
      Coeff c = coeff(f);
      if (!f.is_zero(c)) return c;
    }
  }

 private:
  uint64_t state_;
};

}  // namespace soclelab
