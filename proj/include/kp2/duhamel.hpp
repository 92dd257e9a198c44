#pragma once

#include <vector>

#include "kp2/grid.hpp"

namespace kp2 {

// Newton-Cotes weights for integrating along m uniform intervals of width h
// (h may be negative for leftward paths). Composite Simpson when m is even;
// a 3/8 block absorbs the odd leading interval; a single interval falls back
// to the trapezoid rule. Returns m+1 weights.
std::vector<double> path_quadrature_weights(int m, double h);

// For every node t_i of a uniform mesh containing t = 0 at index i_zero,
// evaluates integral_0^{t_i} U_alpha(t_i - s) F(s) ds by factoring the
// propagator: W(s) = U(-s) F(s) once per node, then one weighted sum and one
// U(t_i) application per output node.
std::vector<SpectralField> duhamel_integral(const std::vector<SpectralField>& F,
                                            const std::vector<double>& times, int i_zero,
                                            double alpha);

}  // namespace kp2
