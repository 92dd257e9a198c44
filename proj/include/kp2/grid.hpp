#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "kp2/errors.hpp"

namespace kp2 {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Uniform periodic grid on [0,lx) x [0,ly) with even mode counts.
// Frequencies are stored in DFT order: storage index ix carries the signed
// index j = ix for ix < nx/2 and j = ix - nx otherwise, so j runs over
// [-nx/2, nx/2) with the unpaired Nyquist mode at ix = nx/2.
struct Grid2D {
  int nx = 0, ny = 0;
  double lx = 0.0, ly = 0.0;

  Grid2D() = default;
  Grid2D(int nx_, int ny_, double lx_, double ly_) : nx(nx_), ny(ny_), lx(lx_), ly(ly_) {
    if (nx < 4 || ny < 4 || nx % 2 != 0 || ny % 2 != 0)
      throw ShapeError("Grid2D: mode counts must be even and >= 4");
    if (!(lx > 0.0) || !(ly > 0.0)) throw ShapeError("Grid2D: periods must be positive");
  }

  int index_x(int ix) const { return ix < nx / 2 ? ix : ix - nx; }
  int index_y(int iy) const { return iy < ny / 2 ? iy : iy - ny; }
  double xi(int ix) const { return kTwoPi / lx * index_x(ix); }
  double eta(int iy) const { return kTwoPi / ly * index_y(iy); }
  double x(int ix) const { return lx * ix / nx; }
  double y(int iy) const { return ly * iy / ny; }

  // Physical and frequency cell measures.
  double dmu_x() const { return lx * ly / (double(nx) * double(ny)); }
  double dmu_xi() const { return (kTwoPi / lx) * (kTwoPi / ly); }
  // dmu_xi / (2 pi)^2; the weight that makes the spectral l2 sum equal the
  // physical one under the unnormalised transform pair used here.
  double spectral_measure() const { return 1.0 / (lx * ly); }

  std::size_t size() const { return std::size_t(nx) * std::size_t(ny); }
  std::size_t at(int ix, int iy) const { return std::size_t(ix) * ny + iy; }

  bool operator==(const Grid2D&) const = default;
};

struct PhysicalField {
  Grid2D grid;
  std::vector<cplx> values;  // row-major [ix][iy]

  static PhysicalField zero(const Grid2D& g) { return {g, std::vector<cplx>(g.size())}; }
  cplx& at(int ix, int iy) { return values[grid.at(ix, iy)]; }
  const cplx& at(int ix, int iy) const { return values[grid.at(ix, iy)]; }
};

struct SpectralField {
  Grid2D grid;
  std::vector<cplx> coeffs;  // row-major [ix][iy], DFT frequency order

  static SpectralField zero(const Grid2D& g) { return {g, std::vector<cplx>(g.size())}; }
  cplx& at(int ix, int iy) { return coeffs[grid.at(ix, iy)]; }
  const cplx& at(int ix, int iy) const { return coeffs[grid.at(ix, iy)]; }
};

struct DealiasMask {
  Grid2D grid;
  std::vector<std::uint8_t> keep;

  bool at(int ix, int iy) const { return keep[grid.at(ix, iy)] != 0; }
};

// Elementwise arithmetic; shapes must agree.
SpectralField operator+(const SpectralField& a, const SpectralField& b);
SpectralField operator-(const SpectralField& a, const SpectralField& b);
SpectralField operator*(const cplx& c, const SpectralField& a);
SpectralField& operator+=(SpectralField& a, const SpectralField& b);

// y += c * x
void axpy(const cplx& c, const SpectralField& x, SpectralField& y);

}  // namespace kp2
