#pragma once

#include <string>

#include "kp2/exponents.hpp"
#include "kp2/regions.hpp"

namespace kp2 {

// The region-indexed kernels of the bilinear-estimate decomposition. Each one
// is the weight left over after reducing the region's piece of the estimate to
// a bilinear Strichartz inequality; boundedness on its region is the content
// being probed.
enum class KernelId { k00, k10, k12, k11_tilde, k11, k20, k21, k22 };

constexpr KernelId kAllKernels[] = {KernelId::k00, KernelId::k10,       KernelId::k12,
                                    KernelId::k11_tilde, KernelId::k11, KernelId::k20,
                                    KernelId::k21, KernelId::k22};

std::string kernel_name(KernelId id);
KernelId kernel_from_name(const std::string& name);
RegionTag kernel_region(KernelId id);

// Kernel value at (mu1, mu); RegionError when the point is not in the
// kernel's region.
double kernel_value(KernelId id, const Mu& mu1, const Mu& mu, const ExponentSet& E);

// Same, without the region check (for samplers that already classified).
double kernel_value_unchecked(KernelId id, const Mu& mu1, const Mu& mu,
                              const ExponentSet& E);

// The closed-form majorant each region argument reduces the kernel to; the
// kernel should stay below a single constant times this at every region point.
double kernel_majorant(KernelId id, const Mu& mu1, const Mu& mu, const ExponentSet& E);

}  // namespace kp2
