#pragma once

#include <vector>

namespace trustcal {

// Uniform partition of [0, 1] into `bin_count` intervals. Bin i covers
// [i/M, (i+1)/M), except the last bin which is closed at 1. The
// representative of a bin is its midpoint i/M + 1/(2M).
struct BinningScheme {
  int bin_count = 0;
  std::vector<double> lower_edges;
  std::vector<double> representatives;
};

BinningScheme make_uniform_bins(int m);

// Index of the bin containing p, i.e. floor(p*M) clamped so that p = 1 lands
// in the last bin. Values within 1e-9 outside [0, 1] are clamped; anything
// further out throws std::invalid_argument.
int assign_bin(double p, const BinningScheme& scheme);

}  // namespace trustcal
