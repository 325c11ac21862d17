#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rlab/stats/report.hpp"

namespace rlab {

using PointPairs = std::vector<std::pair<double, double>>;

struct Cellization {
  int cells = 20;       // per axis
  double extent = 4.0;  // [0, extent]^2; the rest is one overflow cell
  int min_pooled = 10;  // sparse cells are pooled into one bucket
  int bootstrap = 200;
  double quantile = 0.99;
};

// Cell counts on the grid, overflow last.
std::vector<double> histogram2d(const PointPairs& pts, const Cellization& c);

// Total variation between two normalised histograms of equal layout.
double total_variation(const std::vector<double>& a, const std::vector<double>& b);

// TV between the histograms of `a` and `b`, compared with the `quantile`
// of TVs between two multinomial draws (sizes |a|, |b|) from the pooled cell
// frequencies. Cells whose pooled count is below min_pooled are merged
// first.
VerificationReport tv_two_sample_test(const PointPairs& a, const PointPairs& b, const Cellization& c,
                                      std::uint64_t seed, std::string name = "duality_tv");

PointPairs transposed(const PointPairs& pts);

}  // namespace rlab
