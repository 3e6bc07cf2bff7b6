#include "trustcal/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace trustcal {

double PortableRng::exponential() { return -std::log(uniform_pos()); }

double PortableRng::normal() {
  const double u1 = uniform_pos();
  const double u2 = uniform_pos();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double PortableRng::gamma(double shape) {
  if (!(shape > 0.0)) {
    throw std::invalid_argument("gamma shape must be positive");
  }
  if (shape < 1.0) {
    // Boost to shape + 1, then scale back.
    const double g = gamma(shape + 1.0);
    return g * std::pow(uniform_pos(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = normal();
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    const double u = uniform_pos();
    if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
      return d * v;
    }
  }
}

}  // namespace trustcal
