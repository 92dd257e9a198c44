#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kp2/grid.hpp"

namespace kp2 {

struct RatioTable {
  std::string kind;
  std::vector<double> ratios;
  double max_ratio = 0.0;
  double median_ratio = 0.0;
};

// Single-field mixed-norm ratio
//   || |D_x|^-gamma U(t) u0 ||_{L^q_t L^r_xy, t in [-2,2]} / ||u0||_L2
// with gamma = (1 - 2/r)(1/2 - alpha/4). Requires 2 < q and 1/r + 1/q = 1/2.
// Zero data is guarded to ratio 0.
double strichartz_mixed_ratio(const SpectralField& u0, double alpha, double q, double r);

// The ratio over n_trials random band-limited unit-L2 fields.
RatioTable strichartz_ratio_probe(double alpha, double q, double r, int n_trials,
                                  const Grid2D& grid, std::uint64_t seed);

// Ratio || P_{1/3}(u1, u2) ||_L2 / ( || |D_x|^{1/2} u1 ||_{X^{0,0,b}} *
// || |D_x|^{-alpha/4} u2 ||_{X^{0,0,b}} ) for windowed free evolutions of
// random band-limited data.
RatioTable bilinear_refined_probe(double alpha, double b, int n_trials, const Grid2D& grid,
                                  int nt, std::uint64_t seed);

// Unrestricted-product version: || u1 u2 ||_L2 over both derivative weights
// |D_x|^{1/4 - alpha/8}.
RatioTable bilinear_plain_probe(double alpha, double b, int n_trials, const Grid2D& grid,
                                int nt, std::uint64_t seed);

std::string ratio_table_json(const RatioTable& t);

}  // namespace kp2
