#include "kp2/transforms.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

#include "kp2/utils.hpp"

namespace kp2 {

namespace {

// FFTW plans per grid shape, created once. Plans use FFTW_ESTIMATE (results do
// not depend on runtime timing) and FFTW_UNALIGNED so they can be executed on
// plain std::vector storage via the new-array interface.
struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

PlanPair& plans_for(int nx, int ny) {
  static std::map<std::pair<int, int>, PlanPair> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.try_emplace({nx, ny});
  if (inserted) {
    std::vector<cplx> a(std::size_t(nx) * ny), b(std::size_t(nx) * ny);
    auto* pa = reinterpret_cast<fftw_complex*>(a.data());
    auto* pb = reinterpret_cast<fftw_complex*>(b.data());
    it->second.fwd =
        fftw_plan_dft_2d(nx, ny, pa, pb, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    it->second.bwd =
        fftw_plan_dft_2d(nx, ny, pa, pb, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  return it->second;
}

std::vector<cplx> run_dft(const Grid2D& g, const std::vector<cplx>& in, bool forward) {
  PlanPair& plans = plans_for(g.nx, g.ny);
  std::vector<cplx> out(in.size());
  auto* pin = reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data()));
  auto* pout = reinterpret_cast<fftw_complex*>(out.data());
  fftw_execute_dft(forward ? plans.fwd : plans.bwd, pin, pout);
  return out;
}

double weighted_l2(const std::vector<cplx>& v, double measure) {
  std::vector<double> terms(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) terms[i] = std::norm(v[i]) * measure;
  return std::sqrt(pairwise_sum(terms));
}

}  // namespace

SpectralField forward_transform(const PhysicalField& f) {
  if (f.values.size() != f.grid.size())
    throw ShapeError("forward_transform: value array does not match grid");
  SpectralField out{f.grid, run_dft(f.grid, f.values, true)};
  const double w = f.grid.dmu_x();
  for (auto& c : out.coeffs) c *= w;
  return out;
}

PhysicalField inverse_transform(const SpectralField& F) {
  if (F.coeffs.size() != F.grid.size())
    throw ShapeError("inverse_transform: coefficient array does not match grid");
  PhysicalField out{F.grid, run_dft(F.grid, F.coeffs, false)};
  const double w = F.grid.spectral_measure();
  for (auto& v : out.values) v *= w;
  return out;
}

SpectralField project_zero_x_mean(const SpectralField& F) {
  SpectralField out = F;
  for (int iy = 0; iy < F.grid.ny; ++iy) out.coeffs[F.grid.at(0, iy)] = cplx(0.0, 0.0);
  return out;
}

DealiasMask dealias_mask(const Grid2D& g) {
  DealiasMask m{g, std::vector<std::uint8_t>(g.size(), 0)};
  for (int ix = 0; ix < g.nx; ++ix) {
    const int j = g.index_x(ix);
    if (3 * std::abs(j) > g.nx) continue;
    for (int iy = 0; iy < g.ny; ++iy) {
      const int k = g.index_y(iy);
      if (3 * std::abs(k) > g.ny) continue;
      m.keep[g.at(ix, iy)] = 1;
    }
  }
  return m;
}

SpectralField apply_mask(const SpectralField& F, const DealiasMask& m) {
  if (!(F.grid == m.grid)) throw ShapeError("apply_mask: mask grid mismatch");
  SpectralField out = F;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i)
    if (!m.keep[i]) out.coeffs[i] = cplx(0.0, 0.0);
  return out;
}

double l2_norm(const PhysicalField& f) { return weighted_l2(f.values, f.grid.dmu_x()); }

double l2_norm(const SpectralField& F) {
  return weighted_l2(F.coeffs, F.grid.spectral_measure());
}

double max_abs(const PhysicalField& f) {
  double m = 0.0;
  for (const auto& v : f.values) m = std::max(m, std::abs(v));
  return m;
}

SpectralField hermitian_symmetrize(const SpectralField& F) {
  const Grid2D& g = F.grid;
  SpectralField out = F;
  for (int ix = 0; ix < g.nx; ++ix) {
    const int rx = (g.nx - ix) % g.nx;
    for (int iy = 0; iy < g.ny; ++iy) {
      const int ry = (g.ny - iy) % g.ny;
      out.coeffs[g.at(ix, iy)] =
          0.5 * (F.coeffs[g.at(ix, iy)] + std::conj(F.coeffs[g.at(rx, ry)]));
    }
  }
  return out;
}

double hermitian_asymmetry(const SpectralField& F) {
  const Grid2D& g = F.grid;
  double m = 0.0;
  for (int ix = 0; ix < g.nx; ++ix) {
    const int rx = (g.nx - ix) % g.nx;
    for (int iy = 0; iy < g.ny; ++iy) {
      const int ry = (g.ny - iy) % g.ny;
      m = std::max(m, std::abs(F.coeffs[g.at(ix, iy)] - std::conj(F.coeffs[g.at(rx, ry)])));
    }
  }
  return m;
}

}  // namespace kp2
