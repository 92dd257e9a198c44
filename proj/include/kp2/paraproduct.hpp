#pragma once

#include <limits>

#include "kp2/norms.hpp"

namespace kp2 {

// Frequency-restricted product P_c(u1, u2): the convolution over pairs
// (xi1, xi - xi1) keeping only |xi1| <= c |xi - xi1|. Inputs and output are
// two-thirds dealiased, so P_inf coincides with the plain dealiased product.
// The x-convolution is exact per column pair; the eta-convolution is exact on
// the retained modes.
SpectralField paraproduct(const SpectralField& u1, const SpectralField& u2, double c);

// Slicewise application; the restriction involves only spatial frequencies,
// so a time-local product is the exact space-time operator.
SpaceTimeField paraproduct(const SpaceTimeField& u1, const SpaceTimeField& u2, double c);

inline constexpr double kNoRestriction = std::numeric_limits<double>::infinity();

}  // namespace kp2
