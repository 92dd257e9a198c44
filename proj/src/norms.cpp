#include "kp2/norms.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

#include "kp2/propagator.hpp"
#include "kp2/transforms.hpp"
#include "kp2/utils.hpp"

namespace kp2 {

namespace {

double weighted_sum_sqrt(std::vector<double>& terms) {
  return std::sqrt(pairwise_sum(terms));
}

fftw_plan time_plan(int nt) {
  static std::map<int, fftw_plan> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(nt);
  if (it == cache.end()) {
    std::vector<cplx> a(nt), b(nt);
    fftw_plan p = fftw_plan_dft_1d(nt, reinterpret_cast<fftw_complex*>(a.data()),
                                   reinterpret_cast<fftw_complex*>(b.data()), FFTW_FORWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    it = cache.emplace(nt, p).first;
  }
  return it->second;
}

}  // namespace

double sobolev_norm(const SpectralField& F, double s1, double s2) {
  const Grid2D& g = F.grid;
  const double meas = g.spectral_measure();
  std::vector<double> terms;
  terms.reserve(g.size());
  for (int ix = 1; ix < g.nx; ++ix) {
    const double wx = std::pow(jbr(g.xi(ix)), s1);
    for (int iy = 0; iy < g.ny; ++iy) {
      const double w = wx * std::pow(jbr(g.eta(iy)), s2);
      terms.push_back(std::norm(w * F.coeffs[g.at(ix, iy)]) * meas);
    }
  }
  return weighted_sum_sqrt(terms);
}

double homogeneous_norm(const SpectralField& F, double s1, double s2) {
  const Grid2D& g = F.grid;
  if (s2 < 0.0) {
    for (int ix = 1; ix < g.nx; ++ix)
      if (std::abs(F.coeffs[g.at(ix, 0)]) != 0.0)
        throw DomainError("homogeneous_norm: s2 < 0 but eta = 0 mode carries data");
  }
  const bool skip_eta0 = s2 != 0.0;
  const double meas = g.spectral_measure();
  std::vector<double> terms;
  terms.reserve(g.size());
  for (int ix = 1; ix < g.nx; ++ix) {
    const double wx = std::pow(std::fabs(g.xi(ix)), s1);
    for (int iy = 0; iy < g.ny; ++iy) {
      if (skip_eta0 && iy == 0) continue;
      const double w = wx * std::pow(std::fabs(g.eta(iy)), s2);
      terms.push_back(std::norm(w * F.coeffs[g.at(ix, iy)]) * meas);
    }
  }
  return weighted_sum_sqrt(terms);
}

double lambda_symbol(double tau, double xi, double eta, double alpha) {
  if (xi == 0.0) throw DomainError("lambda_symbol: xi = 0");
  return tau - xi * std::pow(std::fabs(xi), alpha) + eta * eta / xi;
}

SpaceTimeField SpaceTimeField::zero(const Grid2D& g, double window, int nt) {
  if (nt < 2 || nt % 2 != 0) throw ShapeError("SpaceTimeField: nt must be even and >= 2");
  SpaceTimeField U;
  U.window = window;
  U.nt = nt;
  U.grid = g;
  U.slices.assign(nt, SpectralField::zero(g));
  return U;
}

double bourgain_norm(const SpaceTimeField& U, double s1, double s2, double b, double sigma,
                     double alpha) {
  const Grid2D& g = U.grid;
  const int nt = U.nt;
  if (int(U.slices.size()) != nt) throw ShapeError("bourgain_norm: slice count mismatch");
  const double dt = U.dt();
  const double dtau_over_2pi = 1.0 / (2.0 * U.window);
  const double meas = g.spectral_measure() * dtau_over_2pi;
  fftw_plan plan = time_plan(nt);

  std::vector<cplx> in(nt), out(nt);
  std::vector<double> terms;
  terms.reserve(g.size() * std::size_t(nt));
  for (int ix = 1; ix < g.nx; ++ix) {
    const double xi = g.xi(ix);
    const double wxi = std::pow(std::fabs(xi), -sigma) * std::pow(jbr(xi), s1 + sigma);
    for (int iy = 0; iy < g.ny; ++iy) {
      const double eta = g.eta(iy);
      const double weta = std::pow(jbr(eta), s2);
      for (int n = 0; n < nt; ++n) in[n] = U.slices[n].coeffs[g.at(ix, iy)];
      fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                       reinterpret_cast<fftw_complex*>(out.data()));
      for (int m = 0; m < nt; ++m) {
        // g^(tau_m) = dt * (-1)^m * DFT_m; the mesh-origin phase is unimodular
        // and drops out of the norm.
        const double mag = dt * std::abs(out[m]);
        const double lam = lambda_symbol(U.tau(m), xi, eta, alpha);
        const double w = wxi * weta * std::pow(jbr(lam), b);
        terms.push_back(w * w * mag * mag * meas);
      }
    }
  }
  return weighted_sum_sqrt(terms);
}

SpectralField i_sigma_weight(const SpectralField& F, double sigma) {
  SpectralField out = F;
  const Grid2D& g = F.grid;
  for (int iy = 0; iy < g.ny; ++iy) out.coeffs[g.at(0, iy)] = cplx(0.0, 0.0);
  for (int ix = 1; ix < g.nx; ++ix) {
    const double w = std::pow(jbr(g.xi(ix)) / std::fabs(g.xi(ix)), sigma);
    for (int iy = 0; iy < g.ny; ++iy) out.coeffs[g.at(ix, iy)] *= w;
  }
  return out;
}

SpaceTimeField i_sigma_weight(const SpaceTimeField& U, double sigma) {
  SpaceTimeField out = U;
  for (auto& s : out.slices) s = i_sigma_weight(s, sigma);
  return out;
}

SpaceTimeField free_evolution(const SpectralField& u0, double alpha, double window, int nt,
                              bool apply_psi, double psi_width) {
  if (nt < 2 || nt % 2 != 0) throw ShapeError("free_evolution: nt must be even and >= 2");
  SpaceTimeField U;
  U.window = window;
  U.nt = nt;
  U.grid = u0.grid;
  U.slices.reserve(nt);
  for (int n = 0; n < nt; ++n) {
    const double t = U.time(n);
    SpectralField s = apply_linear(u0, t, alpha);
    if (apply_psi) {
      const double w = cutoff_psi(t, psi_width);
      for (auto& c : s.coeffs) c *= w;
    }
    U.slices.push_back(std::move(s));
  }
  return U;
}

double space_time_l2(const SpaceTimeField& U) {
  std::vector<double> terms(U.nt);
  for (int n = 0; n < U.nt; ++n) {
    const double v = l2_norm(U.slices[n]);
    terms[n] = v * v * U.dt();
  }
  return std::sqrt(pairwise_sum(terms));
}

double tau_leakage_fraction(const SpaceTimeField& U) {
  const Grid2D& g = U.grid;
  const int nt = U.nt;
  fftw_plan plan = time_plan(nt);
  std::vector<cplx> in(nt), out(nt);
  double total = 0.0, tail = 0.0;
  for (int ix = 1; ix < g.nx; ++ix) {
    for (int iy = 0; iy < g.ny; ++iy) {
      for (int n = 0; n < nt; ++n) in[n] = U.slices[n].coeffs[g.at(ix, iy)];
      fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                       reinterpret_cast<fftw_complex*>(out.data()));
      for (int m = 0; m < nt; ++m) {
        const double e = std::norm(out[m]);
        total += e;
        if (std::abs(U.index_t(m)) >= nt / 4) tail += e;
      }
    }
  }
  return total > 0.0 ? std::sqrt(tail / total) : 0.0;
}

}  // namespace kp2
