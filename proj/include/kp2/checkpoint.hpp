#pragma once

#include <string>

#include "kp2/grid.hpp"

namespace kp2 {

// Flat binary field checkpoint:
//   magic "KP2F", u32 version (=1), u32 nx, u32 ny, f64 lx, f64 ly,
//   u32 flags (bit0: payload is spectral), then nx*ny row-major values,
//   each an (re, im) pair of little-endian IEEE-754 binary64.
struct Checkpoint {
  Grid2D grid;
  bool spectral = false;
  std::vector<cplx> data;
};

void write_checkpoint(const std::string& path, const SpectralField& F);
void write_checkpoint(const std::string& path, const PhysicalField& f);
Checkpoint read_checkpoint(const std::string& path);

}  // namespace kp2
