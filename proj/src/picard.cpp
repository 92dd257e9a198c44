#include "kp2/picard.hpp"

#include <cmath>
#include <sstream>

#include "kp2/duhamel.hpp"
#include "kp2/norms.hpp"

namespace kp2 {

const SpectralField& PicardResult::state_at_time(double t) const {
  std::size_t best = 0;
  double dist = std::fabs(times[0] - t);
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double d = std::fabs(times[i] - t);
    if (d < dist) {
      dist = d;
      best = i;
    }
  }
  return states[best];
}

PicardResult picard_solve(const SpectralField& u0, double T, const SimConfig& cfg) {
  cfg.validate();
  if (!(T > 0.0 && T <= 1.0)) throw ConfigError("picard_solve: T must lie in (0, 1]");
  if (!(u0.grid == cfg.grid)) throw ShapeError("picard_solve: initial data grid mismatch");

  const int n = cfg.picard_quadrature_nodes;
  const int i_zero = (n - 1) / 2;
  PicardResult res;
  res.times.resize(n);
  for (int i = 0; i < n; ++i) res.times[i] = -T + 2.0 * T * i / (n - 1);
  res.times[i_zero] = 0.0;

  const SpectralField u0p = project_zero_x_mean(u0);
  // psi(t) with |t| <= T <= 1 is identically 1 on the mesh, but evaluate it as
  // written so nonstandard cutoff widths behave consistently.
  std::vector<SpectralField> lin;
  lin.reserve(n);
  for (int i = 0; i < n; ++i) {
    SpectralField s = apply_linear(u0p, res.times[i], cfg.alpha);
    const double w = cutoff_psi(res.times[i], cfg.cutoff_width);
    for (auto& c : s.coeffs) c *= w;
    lin.push_back(std::move(s));
  }

  std::vector<SpectralField> u = lin;
  const double atol = 1e-13 * std::max(1.0, l2_norm(u0p));
  int rising = 0;
  for (int iter = 1; iter <= cfg.picard_iters; ++iter) {
    std::vector<SpectralField> N;
    N.reserve(n);
    for (int i = 0; i < n; ++i) N.push_back(nonlinear_term(u[i]));
    std::vector<SpectralField> I = duhamel_integral(N, res.times, i_zero, cfg.alpha);

    std::vector<SpectralField> next;
    next.reserve(n);
    double d = 0.0;
    for (int i = 0; i < n; ++i) {
      const double wT = cutoff_psi(res.times[i] / T, cfg.cutoff_width);
      SpectralField s = lin[i];
      axpy(wT, I[i], s);
      d = std::max(d, l2_norm(s - u[i]));
      next.push_back(std::move(s));
    }
    u = std::move(next);
    res.iterations = iter;
    if (!res.increments.empty()) {
      const double prev = res.increments.back();
      res.ratios.push_back(prev > 0.0 ? d / prev : 0.0);
      rising = d > prev ? rising + 1 : 0;
    }
    res.increments.push_back(d);

    if (d <= atol) {
      res.converged = true;
      break;
    }
    if (rising >= 3) {
      std::ostringstream os;
      os << "picard_solve: increments rising for 3 iterations at T=" << T
         << " (contraction failed; shrink T)";
      throw ContractionError(os.str(), res.ratios);
    }
  }
  res.states = std::move(u);
  return res;
}

PicardResult picard_solve_auto(const SpectralField& u0, double T0, const SimConfig& cfg,
                               double* T_used) {
  double T = std::min(1.0, T0);
  for (int attempt = 0; attempt < 40; ++attempt) {
    try {
      PicardResult r = picard_solve(u0, T, cfg);
      const bool ratio_ok = r.ratios.size() < 2 || r.ratios[1] < 0.5;
      if (r.converged && ratio_ok) {
        if (T_used) *T_used = T;
        return r;
      }
    } catch (const ContractionError&) {
      // fall through to halving
    }
    T *= 0.5;
    if (!(T > 1e-12)) break;
  }
  throw ContractionError("picard_solve_auto: no contracting window found", {});
}

}  // namespace kp2
