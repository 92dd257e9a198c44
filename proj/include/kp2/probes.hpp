#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kp2/kernels.hpp"
#include "kp2/utils.hpp"

namespace kp2 {

struct ProbeReport {
  std::string kernel;
  ExponentSet exponents;
  std::vector<double> boxes;              // sampling half-widths K
  std::vector<double> sup_estimates;      // sampled sup of the kernel per box
  std::vector<double> growth_ratios;      // sup[i] / sup[i-1]
  std::vector<double> majorant_ratio_sups;  // sampled sup of kernel/majorant
  std::vector<long> accepted_counts;      // in-region samples per box
  long n_samples = 0;
  std::uint64_t seed = 0;
};

// Monte-Carlo sup estimate of a kernel over its region, for each box
// [-K, K] of frequency magnitudes. Frequencies are drawn log-uniformly in
// magnitude with random signs directly inside the Xi constraint; modulations
// (lambda, lambda1) are drawn log-uniformly up to a range adapted to the
// resonance size so every Lam subregion is populated; taus are reconstructed
// from the sampled modulations. A bounded kernel shows growth ratios -> 1.
ProbeReport boundedness_probe(KernelId id, const ExponentSet& E, std::vector<double> boxes,
                              long n_per_box, std::uint64_t seed,
                              bool enforce_admissibility = true);

std::string probe_report_json(const ProbeReport& rep);

// One sampled point of the kernel's Xi-family (ignoring the Lam part);
// returns nothing when the draw degenerates (zero frequency).
std::optional<std::pair<Mu, Mu>> sample_interaction_point(Rng& rng, RegionTag family,
                                                          double K, double alpha);

}  // namespace kp2
