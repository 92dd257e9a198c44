#pragma once

#include <string>

#include "kp2/grid.hpp"

namespace kp2 {

// Built-in initial profiles. Both are x-derivatives of smooth bumps (applied
// spectrally), so the zero-x-mean constraint holds exactly.
struct InitialProfile {
  std::string profile = "gaussian_dx";  // gaussian_dx | line_bump | file | zero
  double amplitude = 0.25;
  double width = 2.0;    // x extent of the bump
  double width_y = 2.0;  // y extent
  double x0 = -1.0, y0 = -1.0;  // bump centre; negative means domain centre
  std::string path;             // checkpoint path for profile == "file"
};

SpectralField make_initial_data(const Grid2D& g, const InitialProfile& p);

}  // namespace kp2
