#include "kp2/regions.hpp"

#include <cmath>

namespace kp2 {

std::string region_name(RegionTag t) {
  switch (t) {
    case RegionTag::A00: return "A00";
    case RegionTag::Xi1_Lam0: return "Xi1_Lam0";
    case RegionTag::Xi1_Lam1: return "Xi1_Lam1";
    case RegionTag::Xi1_Lam2: return "Xi1_Lam2";
    case RegionTag::Xi2_Lam0: return "Xi2_Lam0";
    case RegionTag::Xi2_Lam1: return "Xi2_Lam1";
    case RegionTag::Xi2_Lam2: return "Xi2_Lam2";
    case RegionTag::Outside: return "Outside";
  }
  return "?";
}

RegionTag classify_region(const Mu& mu1, const Mu& mu, double alpha) {
  const double q = mu.xi - mu1.xi;
  if (mu.xi == 0.0 || mu1.xi == 0.0 || q == 0.0)
    throw DomainError("classify_region: xi, xi1, xi-xi1 must all be nonzero");
  const double a1 = std::fabs(mu1.xi);
  const double aq = std::fabs(q);
  if (a1 > aq) return RegionTag::Outside;
  if (aq <= 1.0) return RegionTag::A00;

  const bool xi1_low = 3.0 * a1 <= aq;
  const double lam = std::fabs(lambda_symbol(mu.tau, mu.xi, mu.eta, alpha));
  const double lam1 = std::fabs(lambda_symbol(mu1.tau, mu1.xi, mu1.eta, alpha));
  const double lam2 =
      std::fabs(lambda_symbol(mu.tau - mu1.tau, q, mu.eta - mu1.eta, alpha));
  int j = 0;
  double best = lam;
  if (lam1 > best) {
    best = lam1;
    j = 1;
  }
  if (lam2 > best) j = 2;

  if (xi1_low)
    return j == 0 ? RegionTag::Xi1_Lam0 : (j == 1 ? RegionTag::Xi1_Lam1 : RegionTag::Xi1_Lam2);
  return j == 0 ? RegionTag::Xi2_Lam0 : (j == 1 ? RegionTag::Xi2_Lam1 : RegionTag::Xi2_Lam2);
}

}  // namespace kp2
