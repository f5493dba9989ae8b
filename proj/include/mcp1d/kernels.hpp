#pragma once

#include "mcp1d/quadrature.hpp"

namespace mcp1d {

// Radius at which the positive-curvature model space closes up:
// pi * sqrt((N - 1) / K) for K > 0, +infinity otherwise.
[[nodiscard]] double conjugate_radius(double K, double N);

// Curvature bound K, dimension bound N > 1, diameter bound D > 0, with the
// derived ratio kappa = K / (N - 1). For K > 0 the diameter must stay
// strictly below the conjugate radius, except the flagged boundary
// configuration K = N - 1, D = pi which is admitted.
struct CurvatureParams {
  double K;
  double N;
  double D;
  double kappa;

  CurvatureParams(double K_, double N_, double D_);
};

// Volume of the unit ball in dimension N: pi^{N/2} / Gamma(N/2 + 1).
[[nodiscard]] double omega(double N);

// sin(sqrt(k) x)/sqrt(k) for k > 0, x for k = 0, sinh(sqrt(-k) x)/sqrt(-k)
// for k < 0; continuous in k at k = 0. Requires x >= 0 and, for k > 0,
// x <= pi/sqrt(k).
[[nodiscard]] double s_kappa(double kappa, double x);

// Distortion coefficient s_k(t theta)/s_k(theta) with k = K/(N-1).
// Returns +infinity when K theta^2 >= (N-1) pi^2 and the limit value t at
// theta = 0. Requires t in [0, 1], theta >= 0.
[[nodiscard]] double sigma(double t, double theta, const CurvatureParams& p);

// t^{1/N} * sigma^{(t)}(theta)^{(N-1)/N}; +infinity propagates.
[[nodiscard]] double tau(double t, double theta, const CurvatureParams& p);

// k_L = integral_0^L s_kappa(t)^{N-1} dt. Requires L >= 0 and, for K > 0,
// L within the conjugate radius.
[[nodiscard]] double k_const(const CurvatureParams& p, double L,
                             const QuadratureConfig& cfg = {});

// Model-space ball volume N * omega_N * k_r. Defined for all r >= 0; for
// K > 0 the radius saturates at the conjugate radius where the model space
// is exhausted.
[[nodiscard]] double model_volume(const CurvatureParams& p, double r,
                                  const QuadratureConfig& cfg = {});

}  // namespace mcp1d
