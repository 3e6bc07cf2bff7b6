#include "trustcal/binning.hpp"

#include <stdexcept>
#include <string>

namespace trustcal {

BinningScheme make_uniform_bins(int m) {
  if (m < 1) {
    throw std::invalid_argument("bin count must be at least 1, got " + std::to_string(m));
  }
  BinningScheme scheme;
  scheme.bin_count = m;
  scheme.lower_edges.resize(m);
  scheme.representatives.resize(m);
  const double width = 1.0 / m;
  for (int i = 0; i < m; ++i) {
    scheme.lower_edges[i] = static_cast<double>(i) / m;
    scheme.representatives[i] = static_cast<double>(i) / m + width / 2.0;
  }
  return scheme;
}

int assign_bin(double p, const BinningScheme& scheme) {
  constexpr double slack = 1e-9;
  if (!(p >= -slack && p <= 1.0 + slack)) {
    throw std::invalid_argument("probability " + std::to_string(p) + " outside [0, 1]");
  }
  if (p < 0.0) p = 0.0;
  if (p > 1.0) p = 1.0;
  int i = static_cast<int>(p * scheme.bin_count);
  if (i >= scheme.bin_count) i = scheme.bin_count - 1;
  return i;
}

}  // namespace trustcal
