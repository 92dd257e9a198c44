#pragma once

#include <string>

#include "kp2/norms.hpp"

namespace kp2 {

// Frequency-interaction regions for the paraproduct half |xi1| <= |xi - xi1|.
//   A00:       |xi1| <= |xi - xi1| <= 1
//   Xi1:       |xi1| <= |xi - xi1|/3, |xi - xi1| >= 1
//   Xi2:       |xi - xi1|/3 <= |xi1| <= |xi - xi1|, |xi - xi1| >= 1
//   Lam_j:     |lambda_j| is the largest modulation (0: output, 1: low factor,
//              2: high factor), ties broken toward the lowest index.
//   Outside:   the mirrored half |xi1| > |xi - xi1|, handled by symmetry.
enum class RegionTag {
  A00,
  Xi1_Lam0,
  Xi1_Lam1,
  Xi1_Lam2,
  Xi2_Lam0,
  Xi2_Lam1,
  Xi2_Lam2,
  Outside,
};

std::string region_name(RegionTag t);

// Total on points with xi, xi1, xi - xi1 all nonzero; DomainError otherwise.
RegionTag classify_region(const Mu& mu1, const Mu& mu, double alpha);

}  // namespace kp2
