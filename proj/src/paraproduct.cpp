#include "kp2/paraproduct.hpp"

#include <cmath>
#include <vector>

#include "kp2/transforms.hpp"

namespace kp2 {

namespace {

struct Entry {
  int k;  // signed eta index
  cplx v;
};

// Nonzero entries of each retained x-column, by signed index.
struct Columns {
  int jcut, kcut;
  std::vector<std::vector<Entry>> cols;  // index j + jcut
};

Columns gather(const SpectralField& F) {
  const Grid2D& g = F.grid;
  Columns c;
  c.jcut = g.nx / 3;
  c.kcut = g.ny / 3;
  c.cols.assign(2 * c.jcut + 1, {});
  for (int j = -c.jcut; j <= c.jcut; ++j) {
    auto& col = c.cols[j + c.jcut];
    const int ix = (j + g.nx) % g.nx;
    for (int k = -c.kcut; k <= c.kcut; ++k) {
      const int iy = (k + g.ny) % g.ny;
      const cplx v = F.coeffs[g.at(ix, iy)];
      if (v != cplx(0.0, 0.0)) col.push_back({k, v});
    }
  }
  return c;
}

}  // namespace

SpectralField paraproduct(const SpectralField& u1, const SpectralField& u2, double c) {
  if (!(u1.grid == u2.grid)) throw ShapeError("paraproduct: grid mismatch");
  const Grid2D& g = u1.grid;
  const Columns a = gather(u1);
  const Columns b = gather(u2);
  const double meas = g.spectral_measure();

  SpectralField out = SpectralField::zero(g);
  for (int j1 = -a.jcut; j1 <= a.jcut; ++j1) {
    const auto& col1 = a.cols[j1 + a.jcut];
    if (col1.empty()) continue;
    const double axi1 = std::fabs(g.xi((j1 + g.nx) % g.nx));
    for (int j2 = -b.jcut; j2 <= b.jcut; ++j2) {
      const auto& col2 = b.cols[j2 + b.jcut];
      if (col2.empty()) continue;
      const int j = j1 + j2;
      if (3 * std::abs(j) > g.nx) continue;
      if (!(axi1 <= c * std::fabs(g.xi((j2 + g.nx) % g.nx)))) continue;
      const int ix = (j + g.nx) % g.nx;
      for (const Entry& e1 : col1) {
        for (const Entry& e2 : col2) {
          const int k = e1.k + e2.k;
          if (3 * std::abs(k) > g.ny) continue;
          const int iy = (k + g.ny) % g.ny;
          out.coeffs[g.at(ix, iy)] += meas * e1.v * e2.v;
        }
      }
    }
  }
  return out;
}

SpaceTimeField paraproduct(const SpaceTimeField& u1, const SpaceTimeField& u2, double c) {
  if (!(u1.grid == u2.grid) || u1.nt != u2.nt || u1.window != u2.window)
    throw ShapeError("paraproduct: space-time mesh mismatch");
  SpaceTimeField out = u1;
  for (int n = 0; n < u1.nt; ++n) out.slices[n] = paraproduct(u1.slices[n], u2.slices[n], c);
  return out;
}

}  // namespace kp2
