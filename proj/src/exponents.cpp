#include "kp2/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kp2 {

double s_threshold(double alpha) {
  return std::max(1.0 - 0.75 * alpha, 0.25 - 0.375 * alpha);
}

ExponentSet make_exponent_set(double alpha, double s, double eps, double b2) {
  ExponentSet E;
  E.alpha = alpha;
  E.s = s;
  E.eps = eps;
  E.b = 0.5 + 0.5 * eps;
  E.b_prime = -0.5 + eps;
  E.b1 = std::max(3.0 / (2.0 * alpha) - 0.75 + eps, 0.0);
  E.b2 = b2 < 0.0 ? E.b1 : b2;
  E.sigma = 0.5 + E.b1;
  E.delta = 1.0 - (E.b - E.b_prime);
  return E;
}

ExponentSet select_exponents(double alpha, double s) {
  if (!(alpha > 4.0 / 3.0 && alpha <= 6.0))
    throw AdmissibilityError("select_exponents: alpha must lie in (4/3, 6]");
  const double c1 = (s + 0.75 * alpha - 1.0) / (alpha + 1.0);
  const double c2 = (0.75 * alpha - 1.0) / (alpha + 1.0);
  const double c3 = (2.0 * s + 0.75 * alpha - 0.5) / alpha;
  std::ostringstream why;
  if (c1 <= 0.0) why << "s <= 1 - 3*alpha/4 (cap (s + 3a/4 - 1)/(a+1) = " << c1 << ")";
  if (c3 <= 0.0) {
    if (why.tellp() > 0) why << "; ";
    why << "s <= 1/4 - 3*alpha/8 (cap (2s + 3a/4 - 1/2)/a = " << c3 << ")";
  }
  if (why.tellp() > 0)
    throw AdmissibilityError("select_exponents: regularity below threshold: " + why.str());
  const double cap = std::min({c1, c2, c3, 1.0 / 16.0});
  return make_exponent_set(alpha, s, 0.9 * cap);
}

std::vector<AdmissibilityEntry> admissibility_report(const ExponentSet& E) {
  const double a = E.alpha;
  std::vector<AdmissibilityEntry> out;
  auto add = [&out](const std::string& id, std::vector<double> legs) {
    AdmissibilityEntry e;
    e.id = id;
    e.leg_slacks = std::move(legs);
    e.slack = *std::min_element(e.leg_slacks.begin(), e.leg_slacks.end());
    e.satisfied = e.slack >= -1e-12;
    out.push_back(std::move(e));
  };
  add("c44", {E.b1 - 0.0, -E.b_prime - E.b1});
  add("c45", {(std::min(0.0, E.s) - 1.5 + 0.25 * a) / (a + 1.0) - E.b_prime});
  add("c46", {E.b2 - 0.0, E.b1 - E.b2});
  add("c47", {E.sigma - (E.b1 - E.b_prime), (E.b1 - E.b_prime) - (3.0 / (2.0 * a) - 0.25)});
  add("c48", {-E.b_prime + (2.0 * E.s - 0.5 + 0.25 * a) / a - E.b1});
  add("c49", {1.0 + E.b_prime + E.b1 - E.sigma});
  return out;
}

bool all_admissible(const ExponentSet& E) {
  for (const auto& e : admissibility_report(E))
    if (!e.satisfied) return false;
  return true;
}

}  // namespace kp2
