#pragma once

#include <vector>

#include "kp2/grid.hpp"

namespace kp2 {

// Space-time frequency triple dual to (t, x, y).
struct Mu {
  double tau = 0.0, xi = 0.0, eta = 0.0;
};

// Weighted l2 of <xi>^s1 <eta>^s2 |u^|, xi = 0 column excluded; with
// s1 = s2 = 0 this is the L2 norm.
double sobolev_norm(const SpectralField& F, double s1, double s2);

// As above with |xi|^s1 |eta|^s2 weights. eta = 0 modes are excluded whenever
// s2 != 0; for s2 < 0 they must carry zero coefficients (DomainError otherwise).
double homogeneous_norm(const SpectralField& F, double s1, double s2);

// lambda(mu) = tau - xi |xi|^alpha + eta^2 / xi; the distance of a space-time
// frequency from the characteristic surface. Throws DomainError at xi = 0.
double lambda_symbol(double tau, double xi, double eta, double alpha);

// A stack of nt spectral slices on the uniform mesh t_n = -window + n * dt
// over [-window, window), dt = 2*window/nt. The dual tau-grid is
// tau_m = pi * m / window for m in [-nt/2, nt/2).
struct SpaceTimeField {
  double window = 4.0;
  int nt = 0;
  Grid2D grid;
  std::vector<SpectralField> slices;

  double dt() const { return 2.0 * window / nt; }
  double time(int n) const { return -window + n * dt(); }
  int index_t(int m) const { return m < nt / 2 ? m : m - nt; }
  double tau(int m) const { return kTwoPi / (2.0 * window) * index_t(m); }

  static SpaceTimeField zero(const Grid2D& g, double window, int nt);
};

// Space-time norm with weight |xi|^-sigma <xi>^(s1+sigma) <eta>^s2 <lambda>^b:
// transform the slices to the tau-grid, weight, and take the measure-weighted
// l2 sum (xi = 0 excluded). The caller windows the slices (psi or psi_T) first.
double bourgain_norm(const SpaceTimeField& U, double s1, double s2, double b, double sigma,
                     double alpha);

// Multiplies by (<xi>/|xi|)^sigma on xi != 0; conjugates the sigma-weighted
// norm to the unweighted one:
//   bourgain_norm(U, s1, s2, b, sigma) == bourgain_norm(i_sigma_weight(U, sigma),
//                                                       s1, s2, b, 0).
SpectralField i_sigma_weight(const SpectralField& F, double sigma);
SpaceTimeField i_sigma_weight(const SpaceTimeField& U, double sigma);

// Slices psi(t_n / psi_width) * U_alpha(t_n) u0 on the SpaceTimeField mesh.
SpaceTimeField free_evolution(const SpectralField& u0, double alpha, double window, int nt,
                              bool apply_psi = true, double psi_width = 1.0);

// Plain space-time L2 norm (rectangle rule in t, Plancherel in space).
double space_time_l2(const SpaceTimeField& U);

// Fraction of the space-time L2 mass carried by the top octave of the tau
// grid (|m| >= nt/4). A diagnostic for spectral leakage of the finite window;
// reported alongside norm probes, never asserted.
double tau_leakage_fraction(const SpaceTimeField& U);

}  // namespace kp2
