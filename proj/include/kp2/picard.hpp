#pragma once

#include <vector>

#include "kp2/propagator.hpp"

namespace kp2 {

struct PicardResult {
  std::vector<double> times;           // quadrature mesh over [-T, T]
  std::vector<SpectralField> states;   // final iterate on the mesh
  std::vector<double> increments;      // d_n = sup_t ||u^(n+1) - u^(n)||_L2
  std::vector<double> ratios;          // d_{n+1} / d_n
  int iterations = 0;
  bool converged = false;

  const SpectralField& state_at_time(double t) const;
};

// Iterates u <- psi U(.) u0 + psi_T Duhamel(N(u)) on a stored uniform mesh
// over [-T, T] with composite Simpson quadrature. The fixed-point map is
// nonlocal in time, so whole iterates are stored: the working set is
// 3 * picard_quadrature_nodes * nx * ny complex values. Declares divergence
// (and throws ContractionError with the ratio history) after three
// consecutive increasing increments.
PicardResult picard_solve(const SpectralField& u0, double T, const SimConfig& cfg);

// Halves T until the observed ratio d3/d2 drops below 1/2 (or T underflows).
// Returns the successful result; T_used reports the final window.
PicardResult picard_solve_auto(const SpectralField& u0, double T0, const SimConfig& cfg,
                               double* T_used = nullptr);

}  // namespace kp2
