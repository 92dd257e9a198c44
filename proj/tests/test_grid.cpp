#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "kp2/checkpoint.hpp"
#include "kp2/sampling.hpp"
#include "kp2/transforms.hpp"
#include "kp2/utils.hpp"

using namespace kp2;

namespace {

const double kPi = 3.14159265358979323846;

Grid2D default_grid(int n) { return Grid2D(n, n, 32.0 * kPi, 32.0 * kPi); }

SpectralField random_spectral(const Grid2D& g, Rng& rng) {
  SpectralField F = SpectralField::zero(g);
  for (auto& c : F.coeffs) c = cplx(rng.normal(), rng.normal());
  return F;
}

double rel_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num = std::max(num, std::abs(a[i] - b[i]));
    den = std::max(den, std::abs(b[i]));
  }
  return den > 0.0 ? num / den : num;
}

}  // namespace

TEST_CASE("grid validates shape invariants") {
  CHECK_THROWS_AS(Grid2D(3, 4, 1.0, 1.0), ShapeError);
  CHECK_THROWS_AS(Grid2D(4, 6, 0.0, 1.0), ShapeError);
  Grid2D g(8, 6, 2.0, 3.0);
  CHECK(g.index_x(4) == -4);  // unpaired Nyquist
  CHECK(g.xi(1) == doctest::Approx(kTwoPi / 2.0));
  CHECK(g.dmu_x() == doctest::Approx(6.0 / 48.0));
}

TEST_CASE("forward transform of zero is zero") {
  Grid2D g = default_grid(16);
  SpectralField F = forward_transform(PhysicalField::zero(g));
  for (const auto& c : F.coeffs) CHECK(c == cplx(0.0, 0.0));
}

TEST_CASE("transforms reject mismatched shapes") {
  Grid2D g = default_grid(16);
  PhysicalField f{g, std::vector<cplx>(7)};
  CHECK_THROWS_AS(forward_transform(f), ShapeError);
  SpectralField F{g, std::vector<cplx>(7)};
  CHECK_THROWS_AS(inverse_transform(F), ShapeError);
}

TEST_CASE("forward transform of cos(2 pi x / lx) has exactly two modes") {
  Grid2D g = default_grid(32);
  PhysicalField f = PhysicalField::zero(g);
  for (int ix = 0; ix < g.nx; ++ix)
    for (int iy = 0; iy < g.ny; ++iy)
      f.at(ix, iy) = std::cos(kTwoPi * g.x(ix) / g.lx);
  SpectralField F = forward_transform(f);
  const double expect = 0.5 * g.lx * g.ly;  // hand value of the discrete transform
  CHECK(std::abs(F.at(1, 0)) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(std::abs(F.at(g.nx - 1, 0)) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(std::abs(std::abs(F.at(1, 0)) - std::abs(F.at(g.nx - 1, 0))) <= 1e-12 * expect);
  for (int ix = 0; ix < g.nx; ++ix)
    for (int iy = 0; iy < g.ny; ++iy) {
      if (iy == 0 && (ix == 1 || ix == g.nx - 1)) continue;
      CHECK(std::abs(F.at(ix, iy)) <= 1e-10 * expect);
    }
}

TEST_CASE("round trip is the identity on random fields at all sizes") {
  for (int n : {16, 32, 64, 128, 256}) {
    Grid2D g = default_grid(n);
    Rng rng(kDefaultSeed + n);
    PhysicalField f = PhysicalField::zero(g);
    for (auto& v : f.values) v = cplx(rng.normal(), rng.normal());
    PhysicalField back = inverse_transform(forward_transform(f));
    CHECK(rel_diff(back.values, f.values) <= 1e-12);
  }
}

TEST_CASE("single spectral mode inverts to a scaled complex exponential") {
  Grid2D g = default_grid(16);
  SpectralField F = SpectralField::zero(g);
  const int jx = 3, jy = 14;  // eta index -2
  F.at(jx, jy) = cplx(1.0, 0.0);
  PhysicalField f = inverse_transform(F);
  const double scale = g.spectral_measure();
  for (int ix = 0; ix < g.nx; ++ix)
    for (int iy = 0; iy < g.ny; ++iy) {
      const cplx want =
          scale * std::polar(1.0, g.xi(jx) * g.x(ix) + g.eta(jy) * g.y(iy));
      CHECK(std::abs(f.at(ix, iy) - want) <= 1e-14);
    }
}

TEST_CASE("hermitian-symmetric input inverts to a real field") {
  Grid2D g = default_grid(32);
  Rng rng(7);
  SpectralField F = hermitian_symmetrize(random_spectral(g, rng));
  PhysicalField f = inverse_transform(F);
  double max_imag = 0.0, max_val = 0.0;
  for (const auto& v : f.values) {
    max_imag = std::max(max_imag, std::fabs(v.imag()));
    max_val = std::max(max_val, std::abs(v));
  }
  CHECK(max_imag <= 1e-12 * std::max(1.0, max_val));
}

TEST_CASE("parseval equality with the declared measures") {
  for (int n : {16, 64}) {
    Grid2D g = default_grid(n);
    Rng rng(11 + n);
    PhysicalField f = PhysicalField::zero(g);
    for (auto& v : f.values) v = cplx(rng.normal(), rng.normal());
    const double phys = l2_norm(f);
    const double spec = l2_norm(forward_transform(f));
    CHECK(phys == doctest::Approx(spec).epsilon(1e-12));
  }
}

TEST_CASE("zero-x-mean projection") {
  Grid2D g = default_grid(16);
  Rng rng(3);
  SpectralField F = random_spectral(g, rng);

  SUBCASE("field supported on the xi=0 column projects to zero") {
    SpectralField col = SpectralField::zero(g);
    for (int iy = 0; iy < g.ny; ++iy) col.at(0, iy) = F.at(0, iy);
    SpectralField P = project_zero_x_mean(col);
    for (const auto& c : P.coeffs) CHECK(c == cplx(0.0, 0.0));
  }
  SUBCASE("field with no xi=0 content is unchanged bit-for-bit") {
    SpectralField off = F;
    for (int iy = 0; iy < g.ny; ++iy) off.at(0, iy) = cplx(0.0, 0.0);
    SpectralField P = project_zero_x_mean(off);
    CHECK(P.coeffs == off.coeffs);
  }
  SUBCASE("idempotent and norm-nonincreasing") {
    SpectralField P = project_zero_x_mean(F);
    SpectralField PP = project_zero_x_mean(P);
    CHECK(P.coeffs == PP.coeffs);
    CHECK(l2_norm(P) <= l2_norm(F));
  }
}

TEST_CASE("multiplier application") {
  Grid2D g = default_grid(32);
  Rng rng(5);
  SpectralField F = project_zero_x_mean(random_spectral(g, rng));

  SUBCASE("identity symbol is the identity on the xi!=0 subspace") {
    SpectralField G = apply_multiplier(F, [](double, double) { return 1.0; });
    CHECK(rel_diff(G.coeffs, F.coeffs) == 0.0);
  }
  SUBCASE("i xi symbol differentiates cos") {
    PhysicalField f = PhysicalField::zero(g);
    for (int ix = 0; ix < g.nx; ++ix)
      for (int iy = 0; iy < g.ny; ++iy)
        f.at(ix, iy) = std::cos(kTwoPi * g.x(ix) / g.lx);
    SpectralField D = apply_multiplier(forward_transform(f),
                                       [](double xi, double) { return cplx(0.0, xi); });
    PhysicalField d = inverse_transform(D);
    const double k = kTwoPi / g.lx;
    for (int ix = 0; ix < g.nx; ++ix)
      for (int iy = 0; iy < g.ny; ++iy) {
        const double want = -k * std::sin(k * g.x(ix));
        CHECK(std::abs(d.at(ix, iy) - want) <= 1e-12);
      }
  }
  SUBCASE("unimodular symbol preserves the spectral L2 norm") {
    SpectralField G = apply_multiplier(
        F, [](double xi, double eta) { return std::polar(1.0, xi - 0.3 * eta); });
    CHECK(l2_norm(G) == doctest::Approx(l2_norm(F)).epsilon(1e-12));
  }
  SUBCASE("non-finite symbol value names the mode") {
    auto bad = [&] {
      return apply_multiplier(F, [](double xi, double eta) {
        if (xi > 0.2 && eta > 0.2) return 1.0 / 0.0;
        return 1.0;
      });
    };
    CHECK_THROWS_AS(bad(), DomainError);
  }
}

TEST_CASE("two-thirds dealias mask") {
  SUBCASE("n=12 keeps indices -4..4") {
    Grid2D g(12, 12, 1.0, 1.0);
    DealiasMask m = dealias_mask(g);
    for (int ix = 0; ix < 12; ++ix)
      for (int iy = 0; iy < 12; ++iy) {
        const bool want = std::abs(g.index_x(ix)) <= 4 && std::abs(g.index_y(iy)) <= 4;
        CHECK(m.at(ix, iy) == want);
      }
  }
  SUBCASE("nyquist column is always masked out") {
    Grid2D g = default_grid(16);
    DealiasMask m = dealias_mask(g);
    CHECK_FALSE(m.at(g.nx / 2, 0));
  }
  SUBCASE("mask is symmetric under frequency negation") {
    Grid2D g = default_grid(32);
    DealiasMask m = dealias_mask(g);
    for (int ix = 0; ix < g.nx; ++ix)
      for (int iy = 0; iy < g.ny; ++iy) {
        const int rx = (g.nx - ix) % g.nx;
        const int ry = (g.ny - iy) % g.ny;
        CHECK(m.at(ix, iy) == m.at(rx, ry));
      }
  }
}

TEST_CASE("checkpoint files round trip bit-exactly") {
  Grid2D g = default_grid(16);
  Rng rng(9);
  SpectralField F = random_spectral(g, rng);
  const std::string path = "test_grid_checkpoint.kp2f";
  write_checkpoint(path, F);
  Checkpoint cp = read_checkpoint(path);
  CHECK(cp.spectral);
  CHECK(cp.grid == g);
  CHECK(cp.data == F.coeffs);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(read_checkpoint("does_not_exist.kp2f"), IoError);
}

TEST_CASE("band-limited sampler yields unit-L2 hermitian zero-x-mean data") {
  Grid2D g = default_grid(32);
  Rng rng(21);
  SpectralField F = random_band_limited(g, rng, 8, 8);
  CHECK(l2_norm(F) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(hermitian_asymmetry(F) == 0.0);
  for (int iy = 0; iy < g.ny; ++iy) CHECK(F.at(0, iy) == cplx(0.0, 0.0));
}
