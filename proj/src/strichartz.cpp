#include "kp2/strichartz.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "kp2/duhamel.hpp"
#include "kp2/norms.hpp"
#include "kp2/paraproduct.hpp"
#include "kp2/propagator.hpp"
#include "kp2/sampling.hpp"
#include "kp2/transforms.hpp"
#include "kp2/utils.hpp"

namespace kp2 {

namespace {

void finalize(RatioTable& t) {
  t.max_ratio = t.ratios.empty() ? 0.0 : *std::max_element(t.ratios.begin(), t.ratios.end());
  std::vector<double> sorted = t.ratios;
  std::sort(sorted.begin(), sorted.end());
  t.median_ratio = sorted.empty() ? 0.0 : sorted[sorted.size() / 2];
}

double lr_norm(const PhysicalField& f, double r) {
  std::vector<double> terms(f.values.size());
  for (std::size_t i = 0; i < terms.size(); ++i)
    terms[i] = std::pow(std::abs(f.values[i]), r) * f.grid.dmu_x();
  return std::pow(pairwise_sum(terms), 1.0 / r);
}

}  // namespace

double strichartz_mixed_ratio(const SpectralField& u0, double alpha, double q, double r) {
  if (!(q > 2.0) || !std::isfinite(q) || !std::isfinite(r))
    throw DomainError("strichartz_mixed_ratio: need finite q > 2");
  if (std::fabs(1.0 / r + 1.0 / q - 0.5) > 1e-12)
    throw DomainError("strichartz_mixed_ratio: need 1/r + 1/q = 1/2");
  const double gamma = (1.0 - 2.0 / r) * (0.5 - 0.25 * alpha);
  const double denom = l2_norm(u0);
  if (denom == 0.0) return 0.0;

  const int nt = 129;  // Simpson mesh on [-2, 2]
  const auto w = path_quadrature_weights(nt - 1, 4.0 / (nt - 1));
  const SpectralField w0 = apply_multiplier(
      u0, [gamma](double xi, double) { return std::pow(std::fabs(xi), -gamma); });
  std::vector<double> terms(nt);
  for (int n = 0; n < nt; ++n) {
    const double t = -2.0 + 4.0 * n / (nt - 1);
    const PhysicalField v = inverse_transform(apply_linear(w0, t, alpha));
    terms[n] = w[n] * std::pow(lr_norm(v, r), q);
  }
  return std::pow(pairwise_sum(terms), 1.0 / q) / denom;
}

RatioTable strichartz_ratio_probe(double alpha, double q, double r, int n_trials,
                                  const Grid2D& grid, std::uint64_t seed) {
  RatioTable table;
  table.kind = "linear_strichartz";
  Rng rng(seed);
  // Fixed band: the represented data is identical across grid refinements.
  const int band = std::min(8, grid.nx / 4);
  for (int trial = 0; trial < n_trials; ++trial) {
    SpectralField u0 = random_phase_field(grid, rng, band, band);
    table.ratios.push_back(strichartz_mixed_ratio(u0, alpha, q, r));
  }
  finalize(table);
  return table;
}

namespace {

RatioTable bilinear_probe_impl(const char* kind, double cutoff, double w1_exp,
                               double w2_exp, double alpha, double b, int n_trials,
                               const Grid2D& grid, int nt, std::uint64_t seed) {
  RatioTable table;
  table.kind = kind;
  Rng rng(seed);
  const int band = std::min(8, grid.nx / 4);
  for (int trial = 0; trial < n_trials; ++trial) {
    SpectralField a = random_phase_field(grid, rng, band, band);
    SpectralField c = random_phase_field(grid, rng, band, band);
    const SpaceTimeField U1 = free_evolution(a, alpha, 4.0, nt);
    const SpaceTimeField U2 = free_evolution(c, alpha, 4.0, nt);
    const double num = space_time_l2(paraproduct(U1, U2, cutoff));

    SpaceTimeField W1 = U1, W2 = U2;
    for (auto& s : W1.slices)
      s = apply_multiplier(
          s, [w1_exp](double xi, double) { return std::pow(std::fabs(xi), w1_exp); });
    for (auto& s : W2.slices)
      s = apply_multiplier(
          s, [w2_exp](double xi, double) { return std::pow(std::fabs(xi), w2_exp); });
    const double d1 = bourgain_norm(W1, 0.0, 0.0, b, 0.0, alpha);
    const double d2 = bourgain_norm(W2, 0.0, 0.0, b, 0.0, alpha);
    table.ratios.push_back(d1 * d2 > 0.0 ? num / (d1 * d2) : 0.0);
  }
  finalize(table);
  return table;
}

}  // namespace

RatioTable bilinear_refined_probe(double alpha, double b, int n_trials, const Grid2D& grid,
                                  int nt, std::uint64_t seed) {
  return bilinear_probe_impl("bilinear_refined", 1.0 / 3.0, 0.5, -0.25 * alpha, alpha, b,
                             n_trials, grid, nt, seed);
}

RatioTable bilinear_plain_probe(double alpha, double b, int n_trials, const Grid2D& grid,
                                int nt, std::uint64_t seed) {
  const double g = 0.25 - 0.125 * alpha;
  return bilinear_probe_impl("bilinear_plain", kNoRestriction, g, g, alpha, b, n_trials,
                             grid, nt, seed);
}

std::string ratio_table_json(const RatioTable& t) {
  nlohmann::json j;
  j["kind"] = t.kind;
  j["ratios"] = t.ratios;
  j["max_ratio"] = t.max_ratio;
  j["median_ratio"] = t.median_ratio;
  return j.dump(2);
}

}  // namespace kp2
