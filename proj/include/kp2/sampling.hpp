#pragma once

#include "kp2/grid.hpp"
#include "kp2/utils.hpp"

namespace kp2 {

// Random real field with Gaussian coefficients on |j| <= jmax, |k| <= kmax
// (Hermitian-symmetric, zero x-mean), normalised to unit L2.
SpectralField random_band_limited(const Grid2D& g, Rng& rng, int jmax, int kmax);

// Same band and symmetry, but unit-magnitude coefficients with random phases.
// Ratio statistics concentrate much better without amplitude spread.
SpectralField random_phase_field(const Grid2D& g, Rng& rng, int jmax, int kmax);

// Embeds the coefficients of a band-limited field into a finer grid with the
// same periods; the represented function is unchanged.
SpectralField embed_modes(const SpectralField& F, const Grid2D& fine);

}  // namespace kp2
