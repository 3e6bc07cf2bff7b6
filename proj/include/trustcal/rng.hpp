#pragma once

#include <cstdint>
#include <random>

namespace trustcal {

// Seeded generator with portable output. The engine is mt19937_64, whose
// stream is fixed by the standard, and every sampling transform is
// implemented here rather than taken from <random> distributions (which are
// implementation-defined). Identical seeds therefore produce identical data
// on every platform and standard library.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1): midpoints of the 53-bit lattice, never 0 or 1.
  double uniform_pos() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double exponential();        // rate 1
  double normal();             // standard normal, Box-Muller
  double gamma(double shape);  // shape > 0, unit scale, Marsaglia-Tsang

 private:
  std::mt19937_64 engine_;
};

}  // namespace trustcal
