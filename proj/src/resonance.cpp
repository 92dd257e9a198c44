#include "kp2/resonance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace kp2 {

namespace {

using ld = long double;

ld phi_ld(ld x, ld a) {
  if (x == 0.0L) return 0.0L;
  return x * std::pow(std::fabs(x), a);
}

// 16-point Gauss-Legendre rule on [0,1], generated once by Newton iteration
// on the Legendre polynomial. It is only used on segments whose endpoint
// magnitudes exceed 100x the segment length, where the integrand is analytic
// with a huge Bernstein ellipse and the rule is exact to working precision.
struct Gl24 {
  std::array<ld, 16> node{}, weight{};
};

const Gl24& gl24() {
  static Gl24 rule = [] {
    Gl24 r;
    constexpr int n = 16;
    for (int i = 0; i < n; ++i) {
      ld x = std::cos(M_PI * (i + 0.75L) / (n + 0.5L));
      for (int it = 0; it < 100; ++it) {
        ld p0 = 1.0L, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const ld p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        const ld dp = n * (x * p1 - p0) / (x * x - 1.0L);
        const ld dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-20L) break;
      }
      ld p0 = 1.0L, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const ld p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const ld dp = n * (x * p1 - p0) / (x * x - 1.0L);
      r.node[i] = 0.5L * (x + 1.0L);
      r.weight[i] = 1.0L / ((1.0L - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

// integral_0^1 |base + t*step|^a dt; the segment must not cross zero, which
// holds whenever |step| is the smallest of the three interacting frequencies.
// Double pow is enough: the quadrature error is relative to the integral's
// own magnitude, not to the cancelling difference it replaces.
ld abs_pow_segment_mean(ld base, ld step, ld a) {
  const Gl24& r = gl24();
  const double ad = double(a);
  ld s = 0.0L;
  for (int i = 0; i < 16; ++i)
    s += r.weight[i] * ld(std::pow(std::fabs(double(base + r.node[i] * step)), ad));
  return s;
}

double phi_d(double x, double a) {
  if (x == 0.0) return 0.0;
  return x * std::pow(std::fabs(x), a);
}

ld r_alpha_ld(ld S, ld P, ld Q, ld a) {
  // S = xi, P = xi1, Q = xi - xi1 with S = P + Q; r = phi(S) - phi(P) - phi(Q).
  if (S == 0.0L || P == 0.0L || Q == 0.0L) return 0.0L;
  const ld aS = std::fabs(S), aP = std::fabs(P), aQ = std::fabs(Q);
  const ld amax = std::max({aS, aP, aQ});
  const ld amin = std::min({aS, aP, aQ});
  if (amin >= 0.01L * amax) {
    // The direct difference loses at most ~log2(amax/amin) + alpha bits; with
    // this cutoff the relative error stays below ~1e-13, far inside every
    // downstream tolerance, so plain double is enough.
    return ld(phi_d(double(S), double(a)) - phi_d(double(P), double(a)) -
              phi_d(double(Q), double(a)));
  }
  // Mean-value form: the difference of the two big phi values becomes a
  // smooth segment integral between the two larger frequencies, evaluated in
  // extended precision.
  if (aP == amin) return (a + 1.0L) * P * abs_pow_segment_mean(Q, P, a) - phi_ld(P, a);
  if (aQ == amin) return (a + 1.0L) * Q * abs_pow_segment_mean(P, Q, a) - phi_ld(Q, a);
  return phi_ld(S, a) - (a + 1.0L) * S * abs_pow_segment_mean(-Q, S, a);
}

ld lambda_ld(ld tau, ld xi, ld eta, ld a) {
  return tau - phi_ld(xi, a) + eta * eta / xi;
}

struct IdentityParts {
  ld lhs, nu, quad, lam, lam1, lam2;
};

IdentityParts identity_parts(const Mu& mu, const Mu& mu1, double alpha) {
  const ld xi = mu.xi, xi1 = mu1.xi;
  const ld q = xi - xi1;
  if (xi == 0.0L || xi1 == 0.0L || q == 0.0L)
    throw DomainError("resonance identity: xi, xi1, xi-xi1 must all be nonzero");
  const ld a = alpha;
  IdentityParts p;
  p.lam = lambda_ld(mu.tau, xi, mu.eta, a);
  p.lam1 = lambda_ld(mu1.tau, xi1, mu1.eta, a);
  p.lam2 = lambda_ld(ld(mu.tau) - mu1.tau, q, ld(mu.eta) - mu1.eta, a);
  p.lhs = p.lam1 + p.lam2 - p.lam;
  p.nu = r_alpha_ld(xi, xi1, q, a);
  const ld cross = xi * ld(mu1.eta) - ld(mu.eta) * xi1;
  p.quad = cross * cross / (xi * xi1 * q);
  return p;
}

}  // namespace

double phi_alpha(double xi, double alpha) { return double(phi_ld(xi, alpha)); }

double r_alpha(double xi, double xi1, double alpha) {
  return double(r_alpha_ld(xi, xi1, ld(xi) - xi1, alpha));
}

ResonanceSample resonance_bounds_check(double xi, double xi1, double alpha) {
  const ld q = ld(xi) - xi1;
  const ld amin = std::min({std::fabs(ld(xi)), std::fabs(ld(xi1)), std::fabs(q)});
  const ld amax = std::max({std::fabs(ld(xi)), std::fabs(ld(xi1)), std::fabs(q)});
  if (amin == 0.0L)
    throw DomainError("resonance_bounds_check: xi_min = 0, bounds vacuous");
  ResonanceSample s;
  s.xi = xi;
  s.xi1 = xi1;
  s.alpha = alpha;
  const ld a = alpha;
  const ld pow_max = amax < 1e-300L ? 0.0L : ld(std::pow(double(amax), alpha));
  const ld scale = amin * pow_max;
  const ld two_pow = std::exp2(double(a));
  const ld lower = (a / two_pow) * scale;
  const ld upper = (a + 1.0L + 1.0L / two_pow) * scale;
  const ld r = r_alpha_ld(xi, xi1, q, a);
  const ld rabs = std::fabs(r);
  s.r_value = double(r);
  s.lower_bound = double(lower);
  s.upper_bound = double(upper);
  s.margin_low = double(rabs - lower);
  s.margin_high = double(rabs - upper);
  return s;
}

double resonance_identity_residual(const Mu& mu, const Mu& mu1, double alpha) {
  const IdentityParts p = identity_parts(mu, mu1, alpha);
  return double(std::fabs(p.lhs - (p.nu + p.quad)));
}

SignChainResult same_sign_and_lambda_max_check(const Mu& mu, const Mu& mu1, double alpha) {
  const IdentityParts p = identity_parts(mu, mu1, alpha);
  SignChainResult r;
  r.nu = double(p.nu);
  r.quad = double(p.quad);
  r.lhs_abs = double(std::fabs(p.lhs));
  r.lambda_max_abs =
      double(std::max({std::fabs(p.lam), std::fabs(p.lam1), std::fabs(p.lam2)}));
  r.sign_coherent = p.nu == 0.0L || p.quad == 0.0L || (p.nu > 0.0L) == (p.quad > 0.0L);

  const ld q = ld(mu.xi) - mu1.xi;
  const ld amin = std::min({std::fabs(ld(mu.xi)), std::fabs(ld(mu1.xi)), std::fabs(q)});
  const ld amax = std::max({std::fabs(ld(mu.xi)), std::fabs(ld(mu1.xi)), std::fabs(q)});
  const ld a = alpha;
  const ld chain_lower =
      a / (3.0L * std::exp(a * std::log(ld(2.0)))) * amin * std::exp(a * std::log(amax));
  r.chain_lower = double(chain_lower);
  const ld tol = 1e-9L;
  const ld lmax = std::max({std::fabs(p.lam), std::fabs(p.lam1), std::fabs(p.lam2)});
  const ld lhs3 = std::fabs(p.lhs) / 3.0L;
  const ld nu3 = std::fabs(p.nu) / 3.0L;
  r.chain_ok = lmax >= lhs3 * (1.0L - tol) && lhs3 >= nu3 * (1.0L - tol) &&
               nu3 >= chain_lower * (1.0L - tol);
  return r;
}

namespace {

struct ShardAccum {
  double max_rel_residual = 0.0;
  double min_margin_low = std::numeric_limits<double>::infinity();
  double max_margin_high = -std::numeric_limits<double>::infinity();
  long violation_count = 0;
  std::vector<std::string> violations;
};

constexpr int kShards = 64;
constexpr std::size_t kMaxViolationLog = 8;

void log_violation(ShardAccum& acc, const std::string& msg) {
  ++acc.violation_count;
  if (acc.violations.size() < kMaxViolationLog) acc.violations.push_back(msg);
}

CampaignReport merge_shards(const CampaignConfig& cfg, const char* kind,
                            const std::vector<ShardAccum>& acc) {
  CampaignReport rep;
  rep.kind = kind;
  rep.alpha = cfg.alpha;
  rep.n_samples = cfg.n_samples;
  rep.seed = cfg.seed;
  rep.min_margin_low = std::numeric_limits<double>::infinity();
  rep.max_margin_high = -std::numeric_limits<double>::infinity();
  for (const auto& a : acc) {
    rep.max_rel_residual = std::max(rep.max_rel_residual, a.max_rel_residual);
    rep.min_margin_low = std::min(rep.min_margin_low, a.min_margin_low);
    rep.max_margin_high = std::max(rep.max_margin_high, a.max_margin_high);
    rep.violation_count += a.violation_count;
    for (const auto& v : a.violations)
      if (rep.violations.size() < kMaxViolationLog) rep.violations.push_back(v);
  }
  rep.passed = rep.violation_count == 0;
  return rep;
}

}  // namespace

CampaignReport run_bounds_campaign(const CampaignConfig& cfg) {
  std::vector<ShardAccum> acc(kShards);
  const long per_shard = (cfg.n_samples + kShards - 1) / kShards;
  parallel_shards(kShards, [&](int sh) {
    Rng rng(shard_seed(cfg.seed, sh));
    ShardAccum& a = acc[sh];
    for (long i = 0; i < per_shard; ++i) {
      const double xi = rng.signed_log_uniform(cfg.mag_lo, cfg.mag_hi);
      const double xi1 = rng.signed_log_uniform(cfg.mag_lo, cfg.mag_hi);
      if (xi == xi1 || xi == 0.0 || xi1 == 0.0) continue;
      const ResonanceSample s = resonance_bounds_check(xi, xi1, cfg.alpha);
      const double tol = 1e-9 * (1.0 + std::fabs(s.r_value));
      const double scale = std::max(1.0, s.upper_bound);
      a.min_margin_low = std::min(a.min_margin_low, s.margin_low / scale);
      a.max_margin_high = std::max(a.max_margin_high, s.margin_high / scale);
      if (s.margin_low < -tol || s.margin_high > tol) {
        std::ostringstream os;
        os << "bounds violation at xi=" << xi << " xi1=" << xi1 << " alpha=" << cfg.alpha
           << " r=" << s.r_value << " in [" << s.lower_bound << ", " << s.upper_bound << "]";
        log_violation(a, os.str());
      }
    }
  });
  return merge_shards(cfg, "bounds", acc);
}

CampaignReport run_identity_campaign(const CampaignConfig& cfg) {
  std::vector<ShardAccum> acc(kShards);
  const long per_shard = (cfg.n_samples + kShards - 1) / kShards;
  parallel_shards(kShards, [&](int sh) {
    Rng rng(shard_seed(cfg.seed, sh));
    ShardAccum& a = acc[sh];
    for (long i = 0; i < per_shard; ++i) {
      const double xi = rng.signed_log_uniform(cfg.mag_lo, cfg.mag_hi);
      const double xi1 = rng.signed_log_uniform(cfg.mag_lo, cfg.mag_hi);
      if (xi == xi1 || xi == 0.0 || xi1 == 0.0) continue;
      const double eta = rng.signed_log_uniform(cfg.mag_lo, cfg.mag_hi);
      const double eta1 = rng.signed_log_uniform(cfg.mag_lo, cfg.mag_hi);
      const double lam = rng.signed_log_uniform(cfg.mag_lo, cfg.mag_hi);
      const double lam1 = rng.signed_log_uniform(cfg.mag_lo, cfg.mag_hi);
      // Reconstruct tau so the sampled lambda values are attained exactly.
      Mu mu{lam + phi_alpha(xi, cfg.alpha) - eta * eta / xi, xi, eta};
      Mu mu1{lam1 + phi_alpha(xi1, cfg.alpha) - eta1 * eta1 / xi1, xi1, eta1};

      const double resid = resonance_identity_residual(mu, mu1, cfg.alpha);
      const SignChainResult sc = same_sign_and_lambda_max_check(mu, mu1, cfg.alpha);
      const double rel = resid / (1.0 + sc.lhs_abs);
      a.max_rel_residual = std::max(a.max_rel_residual, rel);
      if (rel > 1e-9) {
        std::ostringstream os;
        os << "identity residual " << rel << " at xi=" << xi << " xi1=" << xi1
           << " eta=" << eta << " eta1=" << eta1;
        log_violation(a, os.str());
      }
      if (!sc.sign_coherent) {
        std::ostringstream os;
        os << "sign coherence failed at xi=" << xi << " xi1=" << xi1 << " nu=" << sc.nu
           << " quad=" << sc.quad;
        log_violation(a, os.str());
      }
      if (!sc.chain_ok) {
        std::ostringstream os;
        os << "lambda_max chain failed at xi=" << xi << " xi1=" << xi1
           << " lambda_max=" << sc.lambda_max_abs << " lhs=" << sc.lhs_abs
           << " nu=" << sc.nu;
        log_violation(a, os.str());
      }
    }
  });
  return merge_shards(cfg, "identity", acc);
}

std::string campaign_report_json(const CampaignReport& rep) {
  nlohmann::json j;
  j["kind"] = rep.kind;
  j["alpha"] = rep.alpha;
  j["n_samples"] = rep.n_samples;
  j["seed"] = rep.seed;
  j["max_rel_residual"] = rep.max_rel_residual;
  j["min_margin_low"] = rep.min_margin_low;
  j["max_margin_high"] = rep.max_margin_high;
  j["violations"] = rep.violations;
  j["violation_count"] = rep.violation_count;
  j["passed"] = rep.passed;
  return j.dump(2);
}

}  // namespace kp2
