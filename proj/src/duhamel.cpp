#include "kp2/duhamel.hpp"

#include "kp2/propagator.hpp"

namespace kp2 {

std::vector<double> path_quadrature_weights(int m, double h) {
  std::vector<double> w(std::size_t(m) + 1, 0.0);
  if (m == 0) return w;
  if (m == 1) {
    w[0] = w[1] = 0.5 * h;
    return w;
  }
  int start = 0;
  if (m % 2 == 1) {
    // Simpson 3/8 on the first three intervals keeps the composite rule O(h^4).
    const double c = 3.0 * h / 8.0;
    w[0] += c;
    w[1] += 3.0 * c;
    w[2] += 3.0 * c;
    w[3] += c;
    start = 3;
  }
  const double c = h / 3.0;
  for (int k = start; k + 2 <= m; k += 2) {
    w[k] += c;
    w[k + 1] += 4.0 * c;
    w[k + 2] += c;
  }
  return w;
}

std::vector<SpectralField> duhamel_integral(const std::vector<SpectralField>& F,
                                            const std::vector<double>& times, int i_zero,
                                            double alpha) {
  if (F.size() != times.size() || F.empty())
    throw ShapeError("duhamel_integral: mesh size mismatch");
  const int n = int(times.size());
  const Grid2D& g = F.front().grid;

  std::vector<SpectralField> W;
  W.reserve(n);
  for (int k = 0; k < n; ++k) W.push_back(apply_linear(F[k], -times[k], alpha));

  std::vector<SpectralField> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const int m = std::abs(i - i_zero);
    if (m == 0) {
      out.push_back(SpectralField::zero(g));
      continue;
    }
    const int dir = i > i_zero ? 1 : -1;
    const auto w = path_quadrature_weights(m, (times[i] - times[i_zero]) / m);
    SpectralField acc = SpectralField::zero(g);
    for (int k = 0; k <= m; ++k) axpy(w[k], W[i_zero + dir * k], acc);
    out.push_back(apply_linear(acc, times[i], alpha));
  }
  return out;
}

}  // namespace kp2
