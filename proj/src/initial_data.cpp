#include "kp2/initial_data.hpp"

#include <cmath>

#include "kp2/checkpoint.hpp"
#include "kp2/transforms.hpp"

namespace kp2 {

namespace {

SpectralField derivative_of_bump(const Grid2D& g, const InitialProfile& p, bool sech_x) {
  const double x0 = p.x0 < 0.0 ? 0.5 * g.lx : p.x0;
  const double y0 = p.y0 < 0.0 ? 0.5 * g.ly : p.y0;
  PhysicalField bump = PhysicalField::zero(g);
  for (int ix = 0; ix < g.nx; ++ix) {
    const double dx = g.x(ix) - x0;
    const double fx = sech_x ? std::pow(1.0 / std::cosh(dx / p.width), 2)
                             : std::exp(-dx * dx / (p.width * p.width));
    for (int iy = 0; iy < g.ny; ++iy) {
      const double dy = g.y(iy) - y0;
      bump.at(ix, iy) = fx * std::exp(-dy * dy / (p.width_y * p.width_y));
    }
  }
  SpectralField F = forward_transform(bump);
  F = apply_multiplier(F, [amp = p.amplitude](double xi, double) {
    return cplx(0.0, amp * xi);  // amplitude * d/dx
  });
  return hermitian_symmetrize(F);
}

}  // namespace

SpectralField make_initial_data(const Grid2D& g, const InitialProfile& p) {
  if (p.profile == "zero") return SpectralField::zero(g);
  if (p.profile == "gaussian_dx") return derivative_of_bump(g, p, false);
  if (p.profile == "line_bump") return derivative_of_bump(g, p, true);
  if (p.profile == "file") {
    Checkpoint cp = read_checkpoint(p.path);
    if (!(cp.grid == g)) throw ConfigError("initial data checkpoint grid mismatch");
    SpectralField F{cp.grid, std::move(cp.data)};
    if (!cp.spectral) {
      PhysicalField f{F.grid, std::move(F.coeffs)};
      F = forward_transform(f);
    }
    return project_zero_x_mean(F);
  }
  throw ConfigError("unknown initial profile: " + p.profile);
}

}  // namespace kp2
