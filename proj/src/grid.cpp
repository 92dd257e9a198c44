#include "kp2/grid.hpp"

namespace kp2 {

namespace {
void check_same_shape(const SpectralField& a, const SpectralField& b) {
  if (!(a.grid == b.grid)) throw ShapeError("spectral fields live on different grids");
}
}  // namespace

SpectralField operator+(const SpectralField& a, const SpectralField& b) {
  check_same_shape(a, b);
  SpectralField out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

SpectralField operator-(const SpectralField& a, const SpectralField& b) {
  check_same_shape(a, b);
  SpectralField out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

SpectralField operator*(const cplx& c, const SpectralField& a) {
  SpectralField out = a;
  for (auto& v : out.coeffs) v *= c;
  return out;
}

SpectralField& operator+=(SpectralField& a, const SpectralField& b) {
  check_same_shape(a, b);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] += b.coeffs[i];
  return a;
}

void axpy(const cplx& c, const SpectralField& x, SpectralField& y) {
  check_same_shape(x, y);
  for (std::size_t i = 0; i < y.coeffs.size(); ++i) y.coeffs[i] += c * x.coeffs[i];
}

}  // namespace kp2
