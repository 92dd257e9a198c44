#pragma once

#include <string>
#include <vector>

#include "kp2/errors.hpp"

namespace kp2 {

// The exponent tuple driving every kernel and admissibility check:
//   b = 1/2 + eps/2,  b' = -1/2 + eps,  b1 = max(3/(2 alpha) - 3/4 + eps, 0),
//   sigma = 1/2 + b1, delta = 1 - (b - b').
struct ExponentSet {
  double alpha = 0.0, s = 0.0;
  double eps = 0.0;
  double b = 0.0, b_prime = 0.0;
  double b1 = 0.0, b2 = 0.0;
  double sigma = 0.0, delta = 0.0;
};

// Lowest admissible x-regularity: max(1 - 3a/4, 1/4 - 3a/8).
double s_threshold(double alpha);

// Builds the set from (alpha, s, eps); b2 < 0 means "default to b1".
ExponentSet make_exponent_set(double alpha, double s, double eps, double b2 = -1.0);

// Picks eps = 0.9 * min(admissible caps, 1/16) and derives the rest. Throws
// AdmissibilityError (naming the violated constraint) when s is at or below
// the threshold or alpha is out of range.
ExponentSet select_exponents(double alpha, double s);

struct AdmissibilityEntry {
  std::string id;
  bool satisfied = false;
  double slack = 0.0;               // min over legs; >= 0 means satisfied
  std::vector<double> leg_slacks;   // per-inequality slack, in listed order
};

// Evaluates the six coupled conditions on (b1, b', b2, sigma):
//   c44: 0 <= b1 <= -b'
//   c45: b' <= (min(0,s) - 3/2 + alpha/4) / (alpha+1)
//   c46: 0 <= b2 <= b1
//   c47: sigma >= b1 - b' >= 3/(2 alpha) - 1/4
//   c48: b1 <= -b' + (2s - 1/2 + alpha/4) / alpha
//   c49: sigma <= 1 + b' + b1
// A tiny negative slack (>= -1e-12) still counts as satisfied: several legs
// are met with exact equality by construction and only float round-off moves
// them off zero.
std::vector<AdmissibilityEntry> admissibility_report(const ExponentSet& E);

bool all_admissible(const ExponentSet& E);

}  // namespace kp2
