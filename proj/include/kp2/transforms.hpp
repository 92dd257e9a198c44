#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include "kp2/grid.hpp"

namespace kp2 {

// Unnormalised transform pair with continuum measures:
//   forward:  F(xi,eta) = sum_x f(x) e^{-i(xi x + eta y)} dmu_x
//   inverse:  f(x)      = sum_xi F(xi) e^{+i(xi x + eta y)} dmu_xi / (2 pi)^2
// so inverse(forward(f)) == f up to round-off and Parseval holds with the
// measures above (spectral sums carry the 1/(2 pi)^2 factor).
SpectralField forward_transform(const PhysicalField& f);
PhysicalField inverse_transform(const SpectralField& F);

// Zeroes the entire xi = 0 column; the discrete stand-in for the low-frequency
// constraint. Orthogonal projection: idempotent and norm-nonincreasing.
SpectralField project_zero_x_mean(const SpectralField& F);

// Two-thirds rule: keep exactly |j| <= nx/3 and |k| <= ny/3.
DealiasMask dealias_mask(const Grid2D& g);
SpectralField apply_mask(const SpectralField& F, const DealiasMask& m);

// coeffs(xi,eta) <- m(xi,eta) * coeffs(xi,eta) on xi != 0; the xi = 0 column
// is skipped and left zero. Throws DomainError on a non-finite symbol value,
// naming the offending mode.
template <class M>
SpectralField apply_multiplier(const SpectralField& F, M&& m) {
  SpectralField out = F;
  const Grid2D& g = F.grid;
  for (int iy = 0; iy < g.ny; ++iy) out.coeffs[g.at(0, iy)] = cplx(0.0, 0.0);
  for (int ix = 1; ix < g.nx; ++ix) {
    const double xi = g.xi(ix);
    for (int iy = 0; iy < g.ny; ++iy) {
      const cplx mv = m(xi, g.eta(iy));
      if (!std::isfinite(mv.real()) || !std::isfinite(mv.imag())) {
        std::ostringstream os;
        os << "apply_multiplier: non-finite symbol at mode (xi=" << xi
           << ", eta=" << g.eta(iy) << ")";
        throw DomainError(os.str());
      }
      out.coeffs[g.at(ix, iy)] *= mv;
    }
  }
  return out;
}

// L2 norms with the declared measures; equal for transform pairs.
double l2_norm(const PhysicalField& f);
double l2_norm(const SpectralField& F);
double max_abs(const PhysicalField& f);

// coeffs(-xi,-eta) = conj(coeffs(xi,eta)) enforcement and measurement.
SpectralField hermitian_symmetrize(const SpectralField& F);
double hermitian_asymmetry(const SpectralField& F);

}  // namespace kp2
