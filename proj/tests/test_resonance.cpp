#include <doctest.h>

#include <cmath>

#include "kp2/resonance.hpp"
#include "kp2/utils.hpp"

using namespace kp2;

TEST_CASE("phi is odd with hand values") {
  CHECK(phi_alpha(0.0, 2.0) == 0.0);
  CHECK(phi_alpha(2.0, 2.0) == doctest::Approx(8.0));
  Rng rng(kDefaultSeed);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.signed_log_uniform(1e-3, 1e3);
    const double a = rng.uniform(1.4, 6.0);
    CHECK(phi_alpha(-x, a) == doctest::Approx(-phi_alpha(x, a)).epsilon(1e-14));
  }
}

TEST_CASE("resonance function hand values and symmetries") {
  CHECK(r_alpha(2.0, 1.0, 2.0) == doctest::Approx(6.0).epsilon(1e-14));
  for (double xi : {0.3, -2.0, 17.5}) {
    CHECK(r_alpha(xi, 0.0, 2.0) == 0.0);
    CHECK(r_alpha(xi, xi, 3.0) == 0.0);
  }
  // r(xi, xi1) = r(xi, xi - xi1) = -r(xi - xi1, xi) on a large sample. The
  // mantissas are truncated so the third frequency xi - xi1 is exactly
  // representable; otherwise input rounding alone perturbs the smallest
  // frequency and the identity cannot hold to 1e-12 for any implementation.
  auto trunc26 = [](double x) {
    int e = 0;
    const double m = std::frexp(x, &e);
    return std::ldexp(std::round(m * (1 << 26)), e - 26);
  };
  Rng rng(kDefaultSeed);
  for (int i = 0; i < 100000; ++i) {
    const double xi = trunc26(rng.signed_log_uniform(1e-3, 1e3));
    const double xi1 = trunc26(rng.signed_log_uniform(1e-3, 1e3));
    if (xi == xi1 || xi == 0.0 || xi1 == 0.0) continue;
    const double a = (i % 2 == 0) ? 2.0 : 3.7;
    const double r1 = r_alpha(xi, xi1, a);
    const double r2 = r_alpha(xi, xi - xi1, a);
    const double r3 = -r_alpha(xi - xi1, xi, a);
    const double scale = std::fabs(r1);
    CHECK(std::fabs(r1 - r2) <= 1e-12 * (1.0 + scale));
    CHECK(std::fabs(r1 - r3) <= 1e-12 * (1.0 + scale));
  }
}

TEST_CASE("two-sided resonance bounds") {
  SUBCASE("hand case (2, 1, alpha=2)") {
    const ResonanceSample s = resonance_bounds_check(2.0, 1.0, 2.0);
    CHECK(s.r_value == doctest::Approx(6.0));
    CHECK(s.lower_bound == doctest::Approx(2.0));    // (2/4) * 1 * 4
    CHECK(s.upper_bound == doctest::Approx(13.0));   // 3.25 * 1 * 4
    CHECK(s.margin_low >= 0.0);
    CHECK(s.margin_high <= 0.0);
  }
  SUBCASE("degenerate input is a domain error") {
    CHECK_THROWS_AS(resonance_bounds_check(2.0, 0.0, 2.0), DomainError);
    CHECK_THROWS_AS(resonance_bounds_check(2.0, 2.0, 2.0), DomainError);
  }
  SUBCASE("near-degenerate xi1 -> xi keeps both bounds") {
    const ResonanceSample s = resonance_bounds_check(1.0, 1.0 - 1e-9, 2.0);
    const double tol = 1e-9 * (1.0 + std::fabs(s.r_value));
    CHECK(s.margin_low >= -tol);
    CHECK(s.margin_high <= tol);
  }
  SUBCASE("sampling campaign finds zero violations") {
    for (double a : {1.5, 2.0, 4.0, 6.0}) {
      CampaignConfig cc{a, 100000, kDefaultSeed};
      const CampaignReport rep = run_bounds_campaign(cc);
      CHECK(rep.violation_count == 0);
      CHECK(rep.passed);
    }
  }
}

TEST_CASE("resonance identity") {
  SUBCASE("hand case with all taus on the characteristic surface") {
    const double a = 2.0;
    const double xi = 1.5, xi1 = 0.4, eta = 0.7, eta1 = -0.2;
    Mu mu{phi_alpha(xi, a) - eta * eta / xi, xi, eta};
    Mu mu1{phi_alpha(xi1, a) - eta1 * eta1 / xi1, xi1, eta1};
    const double resid = resonance_identity_residual(mu, mu1, a);
    CHECK(resid <= 1e-12);
  }
  SUBCASE("collinear frequencies make the quadratic term vanish exactly") {
    const double a = 2.0;
    const double xi = 2.0, xi1 = 0.5, k = 3.0;
    Mu mu{0.3, xi, k * xi};
    Mu mu1{-0.8, xi1, k * xi1};
    const SignChainResult sc = same_sign_and_lambda_max_check(mu, mu1, a);
    CHECK(sc.quad == 0.0);
    const double resid = resonance_identity_residual(mu, mu1, a);
    CHECK(resid <= 1e-9 * (1.0 + sc.lhs_abs));
  }
  SUBCASE("sampling campaign: residual, signs and the lambda_max chain") {
    for (double a : {2.0, 4.0}) {
      CampaignConfig cc{a, 100000, kDefaultSeed};
      const CampaignReport rep = run_identity_campaign(cc);
      CHECK(rep.violation_count == 0);
      CHECK(rep.max_rel_residual <= 1e-9);
    }
  }
}

TEST_CASE("sign structure by direct evaluation") {
  // All positive frequencies with xi1 smallest: both terms positive.
  const double a = 2.0;
  const double xi = 3.0, xi1 = 0.5;
  Mu mu{0.1, xi, 1.3};
  Mu mu1{0.2, xi1, 0.4};
  const SignChainResult sc = same_sign_and_lambda_max_check(mu, mu1, a);
  CHECK(sc.nu > 0.0);
  CHECK(sc.quad > 0.0);
  CHECK(sc.sign_coherent);
  CHECK(sc.chain_ok);
}

TEST_CASE("equal modulations satisfy the chain trivially") {
  const double a = 2.0;
  const double xi = 2.0, xi1 = 0.7, eta = 0.9, eta1 = 0.1;
  // Choose taus so lambda = lambda1 = lambda2 = v; the identity forces
  // v = nu + quad.
  const double nu = r_alpha(xi, xi1, a);
  const double cross = xi * eta1 - eta * xi1;
  const double quad = cross * cross / (xi * xi1 * (xi - xi1));
  const double v = nu + quad;
  Mu mu{v + phi_alpha(xi, a) - eta * eta / xi, xi, eta};
  Mu mu1{v + phi_alpha(xi1, a) - eta1 * eta1 / xi1, xi1, eta1};
  const SignChainResult sc = same_sign_and_lambda_max_check(mu, mu1, a);
  CHECK(sc.lambda_max_abs == doctest::Approx(std::fabs(v)).epsilon(1e-9));
  CHECK(sc.lhs_abs == doctest::Approx(std::fabs(v)).epsilon(1e-9));
  CHECK(sc.chain_ok);
}

TEST_CASE("a sign error in the resonance function is caught by the bounds") {
  // Mutated transcription: phi(xi) - phi(xi1) + phi(xi - xi1).
  auto r_mutant = [](double xi, double xi1, double a) {
    return phi_alpha(xi, a) - phi_alpha(xi1, a) + phi_alpha(xi - xi1, a);
  };
  Rng rng(kDefaultSeed);
  long violations = 0;
  for (int i = 0; i < 2000; ++i) {
    const double xi = rng.signed_log_uniform(1e-2, 1e2);
    const double xi1 = rng.signed_log_uniform(1e-2, 1e2);
    if (xi == xi1 || xi == 0.0 || xi1 == 0.0) continue;
    const ResonanceSample s = resonance_bounds_check(xi, xi1, 2.0);
    const double bad = std::fabs(r_mutant(xi, xi1, 2.0));
    const double tol = 1e-9 * (1.0 + bad);
    if (bad - s.lower_bound < -tol || bad - s.upper_bound > tol) ++violations;
  }
  CHECK(violations > 0);
}

TEST_CASE("campaign reports serialise deterministically") {
  CampaignConfig cc{2.0, 5000, kDefaultSeed};
  const std::string a = campaign_report_json(run_bounds_campaign(cc));
  const std::string b = campaign_report_json(run_bounds_campaign(cc));
  CHECK(a == b);
  CHECK(a.find("\"passed\": true") != std::string::npos);
}
