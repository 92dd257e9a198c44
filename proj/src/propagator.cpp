#include "kp2/propagator.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "kp2/norms.hpp"

namespace kp2 {

namespace {

double smooth_step01(double s) {
  // 0 at s <= 0, 1 at s >= 1, monotone C^inf in between.
  auto h = [](double u) { return u <= 0.0 ? 0.0 : std::exp(-1.0 / u); };
  const double a = h(s);
  const double b = h(1.0 - s);
  return a / (a + b);
}

}  // namespace

double cutoff_psi(double t, double width) {
  if (!(width > 0.0)) throw DomainError("cutoff_psi: width must be positive");
  const double a = std::fabs(t) / width;
  if (a <= 1.0) return 1.0;
  if (a >= 2.0) return 0.0;
  return smooth_step01(2.0 - a);
}

double dispersion_symbol(double xi, double eta, double alpha) {
  if (xi == 0.0) throw DomainError("dispersion_symbol: xi = 0");
  return xi * std::pow(std::fabs(xi), alpha) - eta * eta / xi;
}

SpectralField apply_linear(const SpectralField& F, double t, double alpha) {
  return apply_multiplier(F, [t, alpha](double xi, double eta) {
    return std::polar(1.0, t * dispersion_symbol(xi, eta, alpha));
  });
}

SpectralField nonlinear_term(const SpectralField& F) {
  const DealiasMask mask = dealias_mask(F.grid);
  PhysicalField u = inverse_transform(apply_mask(F, mask));
  for (auto& v : u.values) v *= v;
  SpectralField W = forward_transform(u);
  W = apply_multiplier(W, [](double xi, double) { return cplx(0.0, -xi); });
  return project_zero_x_mean(apply_mask(W, mask));
}

void SimConfig::validate() const {
  if (!(alpha > 4.0 / 3.0 && alpha <= 6.0))
    throw ConfigError("SimConfig: alpha must lie in (4/3, 6]");
  if (!(dt > 0.0)) throw ConfigError("SimConfig: dt must be positive");
  if (!(t_end > 0.0)) throw ConfigError("SimConfig: t_end must be positive");
  if (!(cutoff_width > 0.0)) throw ConfigError("SimConfig: cutoff_width must be positive");
  if (picard_iters < 1) throw ConfigError("SimConfig: picard_iters must be >= 1");
  if (picard_quadrature_nodes < 3 || picard_quadrature_nodes % 2 == 0)
    throw ConfigError("SimConfig: picard_quadrature_nodes must be odd and >= 3");
  if (grid.nx == 0) throw ConfigError("SimConfig: grid not set");
  double wmax = 0.0;
  for (int ix = 1; ix < grid.nx; ++ix)
    for (int iy = 0; iy < grid.ny; ++iy)
      wmax = std::max(wmax, std::fabs(dispersion_symbol(grid.xi(ix), grid.eta(iy), alpha)));
  if (!std::isfinite(dt * wmax))
    throw ConfigError("SimConfig: dt * max|omega| is not finite");
}

namespace {

// Precomputed ETDRK4 tables for one (grid, dt, alpha).
struct EtdrkTables {
  std::vector<cplx> E, E2, Q, f1, f2, f3;
};

std::shared_ptr<const EtdrkTables> tables_for(const Grid2D& g, double dt, double alpha) {
  using Key = std::tuple<int, int, double, double, double, double>;
  static std::map<Key, std::shared_ptr<const EtdrkTables>> cache;
  static std::mutex mu;
  const Key key{g.nx, g.ny, g.lx, g.ly, dt, alpha};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  constexpr int M = 32;
  auto tab = std::make_shared<EtdrkTables>();
  const std::size_t n = g.size();
  tab->E.resize(n);
  tab->E2.resize(n);
  tab->Q.resize(n);
  tab->f1.resize(n);
  tab->f2.resize(n);
  tab->f3.resize(n);
  std::vector<cplx> ring(M);
  for (int m = 0; m < M; ++m) ring[m] = std::polar(1.0, kTwoPi * (m + 0.5) / M);

  for (int ix = 0; ix < g.nx; ++ix) {
    for (int iy = 0; iy < g.ny; ++iy) {
      const std::size_t idx = g.at(ix, iy);
      const double omega = ix == 0 ? 0.0 : dispersion_symbol(g.xi(ix), g.eta(iy), alpha);
      const cplx z(0.0, dt * omega);
      tab->E[idx] = std::exp(z);
      tab->E2[idx] = std::exp(0.5 * z);
      cplx q(0), a1(0), a2(0), a3(0);
      for (int m = 0; m < M; ++m) {
        const cplx zr = z + ring[m];
        const cplx ez = std::exp(zr);
        const cplx zr3 = zr * zr * zr;
        q += (std::exp(0.5 * zr) - 1.0) / zr;
        a1 += (-4.0 - zr + ez * (4.0 - 3.0 * zr + zr * zr)) / zr3;
        a2 += (2.0 + zr + ez * (-2.0 + zr)) / zr3;
        a3 += (-4.0 - 3.0 * zr - zr * zr + ez * (4.0 - zr)) / zr3;
      }
      const double w = dt / M;
      tab->Q[idx] = w * q;
      tab->f1[idx] = w * a1;
      tab->f2[idx] = w * a2;
      tab->f3[idx] = w * a3;
    }
  }
  cache.emplace(key, tab);
  return tab;
}

SpectralField combine2(const SpectralField& x, const std::vector<cplx>& cx,
                       const SpectralField& y, const std::vector<cplx>& cy) {
  SpectralField out = SpectralField::zero(x.grid);
  for (std::size_t i = 0; i < out.coeffs.size(); ++i)
    out.coeffs[i] = cx[i] * x.coeffs[i] + cy[i] * y.coeffs[i];
  return out;
}

}  // namespace

SpectralField etdrk4_step(const SpectralField& F, double dt, double alpha,
                          bool include_nonlinearity) {
  auto tab = tables_for(F.grid, dt, alpha);
  if (!include_nonlinearity) {
    SpectralField out = F;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] *= tab->E[i];
    return project_zero_x_mean(out);
  }
  const SpectralField Nv = nonlinear_term(F);
  const SpectralField a = combine2(F, tab->E2, Nv, tab->Q);
  const SpectralField Na = nonlinear_term(a);
  const SpectralField b = combine2(F, tab->E2, Na, tab->Q);
  const SpectralField Nb = nonlinear_term(b);
  SpectralField two_nb_minus_nv = Nb;
  for (std::size_t i = 0; i < two_nb_minus_nv.coeffs.size(); ++i)
    two_nb_minus_nv.coeffs[i] = 2.0 * Nb.coeffs[i] - Nv.coeffs[i];
  const SpectralField c = combine2(a, tab->E2, two_nb_minus_nv, tab->Q);
  const SpectralField Nc = nonlinear_term(c);

  SpectralField out = SpectralField::zero(F.grid);
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    out.coeffs[i] = tab->E[i] * F.coeffs[i] + tab->f1[i] * Nv.coeffs[i] +
                    2.0 * tab->f2[i] * (Na.coeffs[i] + Nb.coeffs[i]) +
                    tab->f3[i] * Nc.coeffs[i];
  }
  return project_zero_x_mean(out);
}

Trajectory simulate_etdrk4(const SpectralField& u0, const SimConfig& cfg, double s1,
                           double s2, int store_stride) {
  cfg.validate();
  if (!(u0.grid == cfg.grid)) throw ShapeError("simulate_etdrk4: initial data grid mismatch");

  Trajectory traj;
  SpectralField u = project_zero_x_mean(u0);
  const double l2_0 = l2_norm(u);
  const long n_steps = std::lround(cfg.t_end / cfg.dt);
  const double dt = cfg.t_end / double(std::max(n_steps, 1l));

  auto record = [&](double t, const SpectralField& state, bool store) {
    TrajectoryPoint p;
    p.t = t;
    p.l2_norm = l2_norm(state);
    p.h_s_norm = sobolev_norm(state, s1, s2);
    p.max_abs = max_abs(inverse_transform(state));
    traj.diagnostics.push_back(p);
    if (store) {
      traj.times.push_back(t);
      traj.states.push_back(state);
    }
  };

  record(0.0, u, true);
  for (long k = 1; k <= n_steps; ++k) {
    u = hermitian_symmetrize(etdrk4_step(u, dt, cfg.alpha));
    const double t = dt * double(k);
    const bool store = (store_stride > 0 && k % store_stride == 0) || k == n_steps;
    record(t, u, store);
    const double l2 = traj.diagnostics.back().l2_norm;
    if (l2_0 > 0.0 && (l2 > 10.0 * l2_0 || !std::isfinite(l2))) {
      std::ostringstream os;
      os << "blow-up guard tripped at t=" << t << ": L2 grew from " << l2_0 << " to " << l2;
      throw InstabilityError(os.str());
    }
  }
  return traj;
}

}  // namespace kp2
