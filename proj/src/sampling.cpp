#include "kp2/sampling.hpp"

#include "kp2/transforms.hpp"

namespace kp2 {

namespace {

template <class Draw>
SpectralField fill_band(const Grid2D& g, int jmax, int kmax, Draw&& draw) {
  SpectralField F = SpectralField::zero(g);
  for (int j = 1; j <= jmax; ++j) {
    for (int k = -kmax; k <= kmax; ++k) {
      const cplx c = draw();
      const int ix = j;
      const int iy = (k + g.ny) % g.ny;
      F.coeffs[g.at(ix, iy)] = c;
      // Hermitian partner at (-j, -k)
      const int rx = g.nx - j;
      const int ry = (g.ny - iy) % g.ny;
      F.coeffs[g.at(rx, ry)] = std::conj(c);
    }
  }
  const double n = l2_norm(F);
  if (n > 0.0)
    for (auto& c : F.coeffs) c *= 1.0 / n;
  return F;
}

}  // namespace

SpectralField random_band_limited(const Grid2D& g, Rng& rng, int jmax, int kmax) {
  return fill_band(g, jmax, kmax, [&rng] { return cplx(rng.normal(), rng.normal()); });
}

SpectralField random_phase_field(const Grid2D& g, Rng& rng, int jmax, int kmax) {
  return fill_band(g, jmax, kmax,
                   [&rng] { return std::polar(1.0, rng.uniform(0.0, kTwoPi)); });
}

SpectralField embed_modes(const SpectralField& F, const Grid2D& fine) {
  const Grid2D& g = F.grid;
  if (fine.lx != g.lx || fine.ly != g.ly || fine.nx < g.nx || fine.ny < g.ny)
    throw ShapeError("embed_modes: target grid must refine the source periods");
  SpectralField out = SpectralField::zero(fine);
  for (int ix = 0; ix < g.nx; ++ix) {
    const int j = g.index_x(ix);
    const int fx = (j + fine.nx) % fine.nx;
    for (int iy = 0; iy < g.ny; ++iy) {
      const int k = g.index_y(iy);
      const int fy = (k + fine.ny) % fine.ny;
      out.coeffs[fine.at(fx, fy)] = F.coeffs[g.at(ix, iy)];
    }
  }
  return out;
}

}  // namespace kp2
