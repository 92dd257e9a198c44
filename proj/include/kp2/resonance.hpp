#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kp2/norms.hpp"
#include "kp2/utils.hpp"

namespace kp2 {

// phi(xi) = xi |xi|^alpha (odd).
double phi_alpha(double xi, double alpha);

// r(xi, xi1) = phi(xi) - phi(xi1) - phi(xi - xi1). Evaluated in extended
// precision with a segment-integral form when the smallest frequency is much
// smaller than the largest, which avoids the catastrophic cancellation of the
// direct difference in that regime.
double r_alpha(double xi, double xi1, double alpha);

struct ResonanceSample {
  double xi = 0.0, xi1 = 0.0, alpha = 0.0;
  double r_value = 0.0;
  double lower_bound = 0.0, upper_bound = 0.0;
  double margin_low = 0.0, margin_high = 0.0;  // |r| - bound, signed
};

// Checks (alpha/2^alpha)|xi_min||xi_max|^alpha <= |r| <= (alpha+1+2^-alpha)
// |xi_min||xi_max|^alpha and fills the margins. DomainError when xi_min = 0
// (the bounds are vacuous there).
ResonanceSample resonance_bounds_check(double xi, double xi1, double alpha);

// |(lambda1 + lambda2 - lambda) - (nu + (xi eta1 - eta xi1)^2 / (xi xi1 (xi-xi1)))|
// with nu = r_alpha(xi, xi1). DomainError when any of xi, xi1, xi-xi1 is zero.
double resonance_identity_residual(const Mu& mu, const Mu& mu1, double alpha);

struct SignChainResult {
  bool sign_coherent = false;  // nu and the quadratic term never oppose
  bool chain_ok = false;       // |lambda_max| >= |L|/3 >= |nu|/3 >= lower bound
  double nu = 0.0, quad = 0.0;
  double lambda_max_abs = 0.0;
  double lhs_abs = 0.0;  // |lambda1 + lambda2 - lambda|
  double chain_lower = 0.0;  // (alpha / (3 * 2^alpha)) |xi_min| |xi_max|^alpha
};

SignChainResult same_sign_and_lambda_max_check(const Mu& mu, const Mu& mu1, double alpha);

struct CampaignConfig {
  double alpha = 2.0;
  long n_samples = 1000000;
  std::uint64_t seed = kDefaultSeed;
  double mag_lo = 1e-3, mag_hi = 1e3;
};

struct CampaignReport {
  std::string kind;  // "bounds" or "identity"
  double alpha = 0.0;
  long n_samples = 0;
  std::uint64_t seed = 0;
  double max_rel_residual = 0.0;  // identity campaigns
  double min_margin_low = 0.0;    // bounds campaigns, relative to tolerance scale
  double max_margin_high = 0.0;
  long violation_count = 0;
  std::vector<std::string> violations;  // first few, for diagnostics
  bool passed = false;
};

// Log-uniform magnitudes with random signs over [mag_lo, mag_hi], sharded
// deterministically. Bounds: zero tolerance violations allowed (relative
// tolerance 1e-9). Identity: residual <= 1e-9 relative, sign coherence and
// the lambda_max chain at every sample.
CampaignReport run_bounds_campaign(const CampaignConfig& cfg);
CampaignReport run_identity_campaign(const CampaignConfig& cfg);

std::string campaign_report_json(const CampaignReport& rep);

}  // namespace kp2
