#include <doctest.h>

#include <cmath>

#include "kp2/duhamel.hpp"
#include "kp2/norms.hpp"
#include "kp2/propagator.hpp"
#include "kp2/sampling.hpp"
#include "kp2/transforms.hpp"
#include "kp2/utils.hpp"

using namespace kp2;

namespace {

const double kPi = 3.14159265358979323846;

Grid2D default_grid(int n) { return Grid2D(n, n, 32.0 * kPi, 32.0 * kPi); }

// Unit-L2 single mode at storage indices (jx, jy).
SpectralField unit_mode(const Grid2D& g, int jx, int jy) {
  SpectralField F = SpectralField::zero(g);
  F.at(jx, jy) = cplx(std::sqrt(g.lx * g.ly), 0.0);
  return F;
}

}  // namespace

TEST_CASE("sobolev norm") {
  Grid2D g = default_grid(32);
  SUBCASE("unit-L2 single mode picks up its weight") {
    const int jx = 5, jy = 29;
    SpectralField F = unit_mode(g, jx, jy);
    CHECK(l2_norm(F) == doctest::Approx(1.0).epsilon(1e-13));
    const double want = std::pow(jbr(g.xi(jx)), 0.7) * std::pow(jbr(g.eta(jy)), -0.3);
    CHECK(sobolev_norm(F, 0.7, -0.3) == doctest::Approx(want).epsilon(1e-12));
  }
  SUBCASE("s1 = s2 = 0 is the L2 norm") {
    Rng rng(kDefaultSeed);
    SpectralField F = random_band_limited(g, rng, 8, 8);
    CHECK(sobolev_norm(F, 0.0, 0.0) == doctest::Approx(l2_norm(F)).epsilon(1e-12));
  }
  SUBCASE("monotone in s1") {
    Rng rng(2);
    SpectralField F = random_band_limited(g, rng, 8, 8);
    double prev = 0.0;
    for (double s1 : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
      const double v = sobolev_norm(F, s1, 0.2);
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("homogeneous norm") {
  Grid2D g = default_grid(32);
  SUBCASE("single mode value") {
    const int jx = 4, jy = 3;
    SpectralField F = unit_mode(g, jx, jy);
    const double want =
        std::pow(std::fabs(g.xi(jx)), -0.4) * std::pow(std::fabs(g.eta(jy)), 0.3);
    CHECK(homogeneous_norm(F, -0.4, 0.3) == doctest::Approx(want).epsilon(1e-12));
  }
  SUBCASE("s2 < 0 with data on eta = 0 is a domain error") {
    SpectralField F = unit_mode(g, 4, 0);
    CHECK_THROWS_AS(homogeneous_norm(F, 0.0, -0.5), DomainError);
    CHECK(homogeneous_norm(F, 0.0, 0.0) > 0.0);  // s2 = 0 keeps eta = 0 modes
  }
  SUBCASE("s1 = s2 = 0 equals L2") {
    Rng rng(3);
    SpectralField F = random_band_limited(g, rng, 8, 8);
    CHECK(homogeneous_norm(F, 0.0, 0.0) == doctest::Approx(l2_norm(F)).epsilon(1e-12));
  }
  SUBCASE("exact rescaling law on matched tori") {
    Rng rng(4);
    SpectralField F = random_band_limited(g, rng, 8, 8);
    for (double alpha : {2.0, 4.0}) {
      for (auto [s1, s2] : std::vector<std::pair<double, double>>{
               {0.0, 0.0}, {-0.5, 0.0}, {0.3, 0.4}}) {
        const double lam = 2.0;
        // u_lam(x, y) = lam^alpha u(lam x, lam^(alpha/2+1) y): same value array
        // scaled, on the shrunken torus.
        Grid2D gs(g.nx, g.ny, g.lx / lam, g.ly / std::pow(lam, 0.5 * alpha + 1.0));
        SpectralField Fs{gs, F.coeffs};
        const double f = std::pow(lam, 0.5 * alpha - 2.0);
        for (auto& c : Fs.coeffs) c *= f;
        const double expo = 0.75 * alpha - 1.0 + s1 + (1.0 + 0.5 * alpha) * s2;
        const double lhs = homogeneous_norm(Fs, s1, s2);
        const double rhs = std::pow(lam, expo) * homogeneous_norm(F, s1, s2);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("lambda symbol hand values") {
  CHECK(lambda_symbol(0.0, 1.0, 1.0, 2.0) == doctest::Approx(0.0));
  CHECK(lambda_symbol(5.0, 2.0, 0.0, 2.0) == doctest::Approx(-3.0));
  // vanishes on the characteristic surface tau = omega(xi, eta)
  for (double xi : {0.5, -1.25})
    for (double eta : {0.0, 2.0}) {
      const double w = dispersion_symbol(xi, eta, 2.5);
      CHECK(std::fabs(lambda_symbol(w, xi, eta, 2.5)) <= 1e-12 * (1.0 + std::fabs(w)));
    }
  CHECK_THROWS_AS(lambda_symbol(1.0, 0.0, 1.0, 2.0), DomainError);
}

TEST_CASE("bourgain norm basics") {
  Grid2D g = default_grid(32);
  Rng rng(kDefaultSeed);
  SpectralField u0 = random_band_limited(g, rng, 8, 8);
  SpaceTimeField U = free_evolution(u0, 2.0, 4.0, 128);

  SUBCASE("sigma = 0, b = 0 equals the iterated Plancherel value") {
    const double bn = bourgain_norm(U, 0.3, 0.2, 0.0, 0.0, 2.0);
    std::vector<double> terms(U.nt);
    for (int n = 0; n < U.nt; ++n) {
      const double v = sobolev_norm(U.slices[n], 0.3, 0.2);
      terms[n] = v * v * U.dt();
    }
    const double iter = std::sqrt(pairwise_sum(terms));
    CHECK(bn == doctest::Approx(iter).epsilon(1e-10));
  }
  SUBCASE("monotone in b >= 0") {
    double prev = 0.0;
    for (double b : {0.0, 0.25, 0.5, 0.75}) {
      const double v = bourgain_norm(U, 0.0, 0.0, b, 0.0, 2.0);
      CHECK(v >= prev);
      prev = v;
    }
  }
  SUBCASE("tau leakage of a resolved windowed evolution is small") {
    const double leak = tau_leakage_fraction(U);
    CHECK(leak >= 0.0);
    CHECK(leak <= 0.1);
  }
}

TEST_CASE("i_sigma weight") {
  Grid2D g = default_grid(32);
  Rng rng(6);
  SpectralField u0 = random_band_limited(g, rng, 8, 8);
  SpaceTimeField U = free_evolution(u0, 2.0, 4.0, 128);

  SUBCASE("sigma = 0 is the identity") {
    SpectralField F = i_sigma_weight(u0, 0.0);
    CHECK(F.coeffs == u0.coeffs);
  }
  SUBCASE("conjugates the weighted norm to the unweighted one") {
    const double a = bourgain_norm(U, -0.4, 0.0, 0.55, 0.53, 2.0);
    const double b = bourgain_norm(i_sigma_weight(U, 0.53), -0.4, 0.0, 0.55, 0.0, 2.0);
    CHECK(a == doctest::Approx(b).epsilon(1e-10));
  }
  SUBCASE("weight >= 1 so every norm is nondecreasing in sigma") {
    double prev = 0.0;
    for (double sg : {0.0, 0.25, 0.5, 1.0}) {
      const double v = l2_norm(i_sigma_weight(u0, sg));
      CHECK(v >= prev - 1e-15);
      prev = v;
    }
  }
}

TEST_CASE("norms are absolutely homogeneous and satisfy the triangle inequality") {
  Grid2D g = default_grid(32);
  Rng rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    SpectralField A = random_band_limited(g, rng, 8, 8);
    SpectralField B = random_band_limited(g, rng, 8, 8);
    const double c = rng.uniform(-3.0, 3.0);
    for (auto [s1, s2] : std::vector<std::pair<double, double>>{{0.4, 0.1}, {-0.3, 0.0}}) {
      CHECK(sobolev_norm(c * SpectralField(A), s1, s2) ==
            doctest::Approx(std::fabs(c) * sobolev_norm(A, s1, s2)).epsilon(1e-10));
      CHECK(sobolev_norm(A + B, s1, s2) <=
            sobolev_norm(A, s1, s2) + sobolev_norm(B, s1, s2) + 1e-10);
      CHECK(homogeneous_norm(A + B, s1, 0.0) <=
            homogeneous_norm(A, s1, 0.0) + homogeneous_norm(B, s1, 0.0) + 1e-10);
    }
  }
}

TEST_CASE("free-evolution ratio stays under the frozen empirical bound") {
  // Observed max over this probe configuration: 2.0023 (the ratio is nearly
  // data-independent); frozen bound = observed max * 1.5.
  const double kFrozenBound = 3.004;
  Grid2D g = default_grid(64);
  Rng rng(kDefaultSeed);
  for (int trial = 0; trial < 20; ++trial) {
    SpectralField u0 = random_band_limited(g, rng, 14, 14);
    SpaceTimeField U = free_evolution(u0, 2.0, 4.0, 256);
    const double ratio =
        bourgain_norm(U, 0.1, 0.1, 0.6, 0.0, 2.0) / sobolev_norm(u0, 0.1, 0.1);
    CHECK(ratio <= kFrozenBound);
    CHECK(ratio > 0.0);
  }
}

TEST_CASE("retraction ratio is uniform over dyadic windows") {
  const double b = 0.4, bp = -0.4;
  Grid2D g = default_grid(64);
  Rng rng(kDefaultSeed);
  SpectralField f0 = random_band_limited(g, rng, 10, 10);
  const int nt = 256;
  SpaceTimeField F = free_evolution(f0, 2.0, 4.0, nt);
  std::vector<double> times(nt);
  for (int n = 0; n < nt; ++n) times[n] = F.time(n);
  const std::vector<SpectralField> I = duhamel_integral(F.slices, times, nt / 2, 2.0);
  const double denF = bourgain_norm(F, 0.0, 0.0, bp, 0.0, 2.0);

  double ratio1 = 0.0;
  for (double T : {1.0, 0.5, 0.25, 0.125, 0.0625, 0.03125}) {
    SpaceTimeField G = F;
    for (int n = 0; n < nt; ++n) {
      G.slices[n] = I[n];
      const double w = cutoff_psi(times[n] / T);
      for (auto& c : G.slices[n].coeffs) c *= w;
    }
    const double num = bourgain_norm(G, 0.0, 0.0, b, 0.0, 2.0);
    const double ratio = num / (std::pow(T, 1.0 - (b - bp)) * denF);
    if (T == 1.0) ratio1 = ratio;
    CHECK(ratio <= 1.5 * ratio1);
  }
}
