#pragma once

#include <vector>

#include "kp2/grid.hpp"
#include "kp2/transforms.hpp"

namespace kp2 {

// Smooth cutoff: 1 for |t| <= width, 0 for |t| >= 2*width, glued with the
// exp(-1/s) smooth step in between. psi_T(t) is cutoff_psi(t, T).
double cutoff_psi(double t, double width = 1.0);

// omega(xi, eta) = xi |xi|^alpha - eta^2 / xi. Throws DomainError at xi = 0.
double dispersion_symbol(double xi, double eta, double alpha);

// Multiplies coefficients by exp(i t omega); unitary on the xi != 0 subspace,
// group law U(s)U(t) = U(s+t).
SpectralField apply_linear(const SpectralField& F, double t, double alpha);

// N(u) = -d/dx (u^2): dealias, square in physical space, transform back,
// multiply by -i xi, dealias again. Output has zero x-mean by construction.
SpectralField nonlinear_term(const SpectralField& F);

enum class Scheme { etdrk4, picard };

struct SimConfig {
  double alpha = 2.0;
  Grid2D grid;
  double dt = 1e-3;
  double t_end = 1.0;
  Scheme scheme = Scheme::etdrk4;
  int picard_iters = 16;
  int picard_quadrature_nodes = 65;
  double cutoff_width = 1.0;

  void validate() const;
};

// One fourth-order exponential time-differencing Runge-Kutta step for
// d/dt u^ = i omega u^ + N^(u). The phi-function coefficients are evaluated
// by averaging over 32 points on a unit circle around each i*omega*dt, which
// stays accurate for small |i omega dt|. Coefficient tables are cached per
// (grid, dt, alpha). With include_nonlinearity = false the step reduces to
// the exact linear propagator.
SpectralField etdrk4_step(const SpectralField& F, double dt, double alpha,
                          bool include_nonlinearity = true);

struct TrajectoryPoint {
  double t = 0.0;
  double l2_norm = 0.0;
  double h_s_norm = 0.0;
  double max_abs = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<SpectralField> states;
  std::vector<TrajectoryPoint> diagnostics;
};

// Steps u0 to t_end with ETDRK4, re-symmetrising after each step so real data
// stays real. Aborts with InstabilityError if the L2 norm grows by more than
// 10x (the conserved flow cannot do that).
Trajectory simulate_etdrk4(const SpectralField& u0, const SimConfig& cfg, double s1 = 0.0,
                           double s2 = 0.0, int store_stride = 0);

}  // namespace kp2
