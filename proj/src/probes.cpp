#include "kp2/probes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kp2/resonance.hpp"

namespace kp2 {

namespace {

constexpr double kMagFloor = 1e-3;

enum class XiFamily { A00, Xi1, Xi2 };

XiFamily xi_family(RegionTag tag) {
  switch (tag) {
    case RegionTag::A00: return XiFamily::A00;
    case RegionTag::Xi1_Lam0:
    case RegionTag::Xi1_Lam1:
    case RegionTag::Xi1_Lam2: return XiFamily::Xi1;
    default: return XiFamily::Xi2;
  }
}

}  // namespace

std::optional<std::pair<Mu, Mu>> sample_interaction_point(Rng& rng, RegionTag family,
                                                          double K, double alpha) {
  const XiFamily fam = xi_family(family);
  double q, xi1;
  switch (fam) {
    case XiFamily::A00:
      q = rng.signed_log_uniform(kMagFloor, 1.0);
      xi1 = rng.sign() * rng.log_uniform(kMagFloor * std::fabs(q), std::fabs(q));
      break;
    case XiFamily::Xi1:
      q = rng.signed_log_uniform(1.0, std::max(K, 1.0 + 1e-6));
      xi1 = rng.sign() * rng.log_uniform(kMagFloor, std::fabs(q) / 3.0);
      break;
    case XiFamily::Xi2:
      q = rng.signed_log_uniform(1.0, std::max(K, 1.0 + 1e-6));
      xi1 = rng.sign() * rng.log_uniform(std::fabs(q) / 3.0, std::fabs(q));
      break;
  }
  const double xi = xi1 + q;
  if (xi == 0.0 || xi1 == 0.0 || q == 0.0) return std::nullopt;

  const double eta = rng.signed_log_uniform(kMagFloor, K);
  const double eta1 = rng.signed_log_uniform(kMagFloor, K);

  // Adapt the modulation range to the resonance scale so that all three
  // Lam subregions occur with usable frequency.
  const double nu = r_alpha(xi, xi1, alpha);
  const double cross = xi * eta1 - eta * xi1;
  const double quad = cross * cross / (xi * xi1 * q);
  const double lam_hi = 10.0 * std::max(1.0, std::fabs(nu) + std::fabs(quad));
  const double lam = rng.signed_log_uniform(kMagFloor, lam_hi);
  const double lam1 = rng.signed_log_uniform(kMagFloor, lam_hi);

  Mu mu{lam + phi_alpha(xi, alpha) - eta * eta / xi, xi, eta};
  Mu mu1{lam1 + phi_alpha(xi1, alpha) - eta1 * eta1 / xi1, xi1, eta1};
  return std::make_pair(mu1, mu);
}

ProbeReport boundedness_probe(KernelId id, const ExponentSet& E, std::vector<double> boxes,
                              long n_per_box, std::uint64_t seed,
                              bool enforce_admissibility) {
  if (enforce_admissibility && !all_admissible(E)) {
    std::ostringstream os;
    os << "boundedness_probe(" << kernel_name(id)
       << "): exponent set fails the admissibility conditions";
    throw AdmissibilityError(os.str());
  }
  const RegionTag target = kernel_region(id);

  ProbeReport rep;
  rep.kernel = kernel_name(id);
  rep.exponents = E;
  rep.boxes = boxes;
  rep.n_samples = n_per_box;
  rep.seed = seed;

  constexpr int kShards = 64;
  for (std::size_t bi = 0; bi < boxes.size(); ++bi) {
    const double K = boxes[bi];
    std::vector<double> shard_sup(kShards, 0.0), shard_mratio(kShards, 0.0);
    std::vector<long> shard_acc(kShards, 0);
    const long per_shard = (n_per_box + kShards - 1) / kShards;
    parallel_shards(kShards, [&](int sh) {
      Rng rng(shard_seed(seed ^ (std::uint64_t(bi) << 32), sh));
      double sup = 0.0, msup = 0.0;
      long acc = 0;
      for (long i = 0; i < per_shard; ++i) {
        auto pt = sample_interaction_point(rng, target, K, E.alpha);
        if (!pt) continue;
        RegionTag tag;
        try {
          tag = classify_region(pt->first, pt->second, E.alpha);
        } catch (const DomainError&) {
          continue;
        }
        if (tag != target) continue;
        ++acc;
        const double v = kernel_value_unchecked(id, pt->first, pt->second, E);
        sup = std::max(sup, v);
        const double m = kernel_majorant(id, pt->first, pt->second, E);
        if (m > 0.0) msup = std::max(msup, v / m);
      }
      shard_sup[sh] = sup;
      shard_mratio[sh] = msup;
      shard_acc[sh] = acc;
    });
    double sup = 0.0, msup = 0.0;
    long acc = 0;
    for (int sh = 0; sh < kShards; ++sh) {
      sup = std::max(sup, shard_sup[sh]);
      msup = std::max(msup, shard_mratio[sh]);
      acc += shard_acc[sh];
    }
    rep.sup_estimates.push_back(sup);
    rep.majorant_ratio_sups.push_back(msup);
    rep.accepted_counts.push_back(acc);
    if (bi > 0)
      rep.growth_ratios.push_back(rep.sup_estimates[bi - 1] > 0.0
                                      ? sup / rep.sup_estimates[bi - 1]
                                      : 0.0);
  }
  return rep;
}

std::string probe_report_json(const ProbeReport& rep) {
  nlohmann::json j;
  j["kernel"] = rep.kernel;
  j["exponents"] = {{"alpha", rep.exponents.alpha}, {"s", rep.exponents.s},
                    {"eps", rep.exponents.eps},     {"b", rep.exponents.b},
                    {"b_prime", rep.exponents.b_prime}, {"b1", rep.exponents.b1},
                    {"b2", rep.exponents.b2},       {"sigma", rep.exponents.sigma},
                    {"delta", rep.exponents.delta}};
  j["boxes"] = rep.boxes;
  j["sup_estimates"] = rep.sup_estimates;
  j["growth_ratios"] = rep.growth_ratios;
  j["majorant_ratio_sups"] = rep.majorant_ratio_sups;
  j["accepted_counts"] = rep.accepted_counts;
  j["n_samples"] = rep.n_samples;
  j["seed"] = rep.seed;
  return j.dump(2);
}

}  // namespace kp2
