#include "kp2/kernels.hpp"

#include <cmath>

#include "kp2/utils.hpp"

namespace kp2 {

std::string kernel_name(KernelId id) {
  switch (id) {
    case KernelId::k00: return "k00";
    case KernelId::k10: return "k10";
    case KernelId::k12: return "k12";
    case KernelId::k11_tilde: return "k11t";
    case KernelId::k11: return "k11";
    case KernelId::k20: return "k20";
    case KernelId::k21: return "k21";
    case KernelId::k22: return "k22";
  }
  return "?";
}

KernelId kernel_from_name(const std::string& name) {
  for (KernelId id : kAllKernels)
    if (kernel_name(id) == name) return id;
  throw ConfigError("unknown kernel id: " + name);
}

RegionTag kernel_region(KernelId id) {
  switch (id) {
    case KernelId::k00: return RegionTag::A00;
    case KernelId::k10: return RegionTag::Xi1_Lam0;
    case KernelId::k12: return RegionTag::Xi1_Lam2;
    case KernelId::k11_tilde:
    case KernelId::k11: return RegionTag::Xi1_Lam1;
    case KernelId::k20: return RegionTag::Xi2_Lam0;
    case KernelId::k21: return RegionTag::Xi2_Lam1;
    case KernelId::k22: return RegionTag::Xi2_Lam2;
  }
  return RegionTag::Outside;
}

namespace {

struct Point {
  double xi, xi1, q;
  double lam, lam1, lam2;        // modulations of output, low, high factor
  double jxi, jxi1, jq;          // <.> of the frequencies
};

Point prepare(const Mu& mu1, const Mu& mu, double alpha) {
  Point p;
  p.xi = mu.xi;
  p.xi1 = mu1.xi;
  p.q = mu.xi - mu1.xi;
  p.lam = lambda_symbol(mu.tau, mu.xi, mu.eta, alpha);
  p.lam1 = lambda_symbol(mu1.tau, mu1.xi, mu1.eta, alpha);
  p.lam2 = lambda_symbol(mu.tau - mu1.tau, p.q, mu.eta - mu1.eta, alpha);
  p.jxi = jbr(p.xi);
  p.jxi1 = jbr(p.xi1);
  p.jq = jbr(p.q);
  return p;
}

double pw(double base, double e) { return std::pow(base, e); }

}  // namespace

double kernel_value_unchecked(KernelId id, const Mu& mu1, const Mu& mu,
                              const ExponentSet& E) {
  const Point p = prepare(mu1, mu, E.alpha);
  const double a = E.alpha, s = E.s;
  const double axi = std::fabs(p.xi), axi1 = std::fabs(p.xi1), aq = std::fabs(p.q);
  const double jl = jbr(p.lam), jl1 = jbr(p.lam1), jl2 = jbr(p.lam2);
  switch (id) {
    case KernelId::k00:
      return pw(p.jxi, s) * pw(p.jxi1, -s) * pw(p.jq, -s) * axi * pw(axi1, 0.5) *
             pw(aq, -0.25 * a);
    case KernelId::k10:
      return pw(jl, E.b_prime + E.b1) * pw(p.jxi, 1.0 + s - (a + 1.0) * E.b1) *
             pw(p.jxi1, -s) * pw(p.jq, -s) * pw(axi1, 0.5) * pw(aq, -0.25 * a);
    case KernelId::k12:
      return pw(jl, E.b_prime + E.b1 + E.b) * pw(jl2, -E.b) *
             pw(p.jxi, 1.0 + s - (a + 1.0) * E.b1) * pw(p.jxi1, -s) * pw(p.jq, -s) *
             pw(axi1, 0.5) * pw(axi, -0.25 * a);
    case KernelId::k11_tilde:
      return pw(jl1, E.b_prime) * pw(p.jxi, 1.0 + s) * pw(p.jxi1, -s) * pw(p.jq, -s) *
             pw(axi1, 0.5) * pw(aq, -0.25 * a);
    case KernelId::k11:
      return pw(p.jxi, 1.0 + s - (a + 1.0) * E.b2) *
             pw(p.jxi1, -s + (a + 1.0) * E.b1 - E.sigma) * pw(p.jq, -s) *
             pw(axi, 0.25 - 0.125 * a) * pw(axi1, E.sigma) * pw(aq, 0.25 - 0.125 * a) /
             (pw(jl, -E.b_prime - E.b2 - E.b) * pw(jl1, E.b + E.b1));
    case KernelId::k20:
      return pw(jl, E.b_prime + E.b2) * pw(p.jxi, s - (a + 1.0) * E.b2 + E.sigma) *
             pw(p.jxi1, -s) * pw(p.jq, -s) * pw(axi, 1.0 - E.sigma) *
             pw(axi1, 0.25 - 0.125 * a) * pw(aq, 0.25 - 0.125 * a);
    case KernelId::k21:
      return pw(jl1, -E.b) * pw(jl, E.b + E.b_prime + E.b2) *
             pw(p.jxi, s - (a + 1.0) * E.b2 + E.sigma) * pw(p.jxi1, -s) * pw(p.jq, -s) *
             pw(axi, 1.5 - E.sigma) * pw(aq, -0.25 * a);
    case KernelId::k22:
      return pw(jl2, -E.b) * pw(jl, E.b + E.b_prime + E.b2) *
             pw(p.jxi, s - (a + 1.0) * E.b2 + E.sigma) * pw(p.jxi1, -s) * pw(p.jq, -s) *
             pw(axi, 1.5 - E.sigma) * pw(axi1, -0.25 * a);
  }
  return 0.0;
}

double kernel_value(KernelId id, const Mu& mu1, const Mu& mu, const ExponentSet& E) {
  const RegionTag tag = classify_region(mu1, mu, E.alpha);
  if (tag != kernel_region(id))
    throw RegionError("kernel " + kernel_name(id) + " evaluated outside its region (point is in " +
                      region_name(tag) + ")");
  return kernel_value_unchecked(id, mu1, mu, E);
}

double kernel_majorant(KernelId id, const Mu& mu1, const Mu& mu, const ExponentSet& E) {
  const Point p = prepare(mu1, mu, E.alpha);
  const double a = E.alpha, s = E.s;
  const double axi = std::fabs(p.xi), axi1 = std::fabs(p.xi1), aq = std::fabs(p.q);
  const double lam_max = std::max({std::fabs(p.lam), std::fabs(p.lam1), std::fabs(p.lam2)});
  switch (id) {
    case KernelId::k00:
      return pw(aq, 1.5 - 0.25 * a);
    case KernelId::k10:
    case KernelId::k12:
    case KernelId::k11_tilde:
      return pw(p.jxi, 1.5 - 0.25 * a + (a + 1.0) * E.b_prime - std::min(0.0, s));
    case KernelId::k11:
      return pw(p.jxi, 1.5 - 0.25 * a + a * (E.b_prime - E.b1)) +
             pw(p.jxi, 1.5 - 0.25 * a - s + (a + 1.0) * E.b_prime);
    case KernelId::k20:
    case KernelId::k21:
    case KernelId::k22:
      return pw(jbr(lam_max), E.b_prime + E.b2) * pw(p.jxi, s - (a + 1.0) * E.b2 + E.sigma) *
             pw(axi, 1.0 - E.sigma) * pw(axi1, -2.0 * s + 0.5 - 0.25 * a);
  }
  return 0.0;
}

}  // namespace kp2
