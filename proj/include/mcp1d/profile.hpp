#pragma once

#include <vector>

#include "mcp1d/density.hpp"
#include "mcp1d/kernels.hpp"

namespace mcp1d {

struct ProfilePoint {
  double v;       // mass in (0, 1)
  double a;       // split point with v_D(a) = v
  double I;       // profile value f(a)
  double I_asym;  // k_D^{-1/N} v^{(N-1)/N}
};

struct InversionConfig {
  double tol = 1e-10;  // ceiling on |v_D(a) - v|; tightened at small masses
  int max_iter = 200;
};

// v_D(a): mass of [0, a] under the model density with split point a.
[[nodiscard]] double needle_mass(const ModelDensityParams& mp,
                                 const QuadratureConfig& cfg = {});

// The unique a in (0, D) with v_D(a) = v, by bracketed secant/bisection
// seeded at (k_D v)^{1/N}. v_D is strictly increasing so the root is simple.
[[nodiscard]] double inverse_mass(const CurvatureParams& p, double v,
                                  const QuadratureConfig& cfg = {},
                                  const InversionConfig& inv = {});

// Exact profile point: a = inverse_mass(v), I = f_boundary(a). Rejects the
// positive-curvature boundary configuration (see sphere_boundary_profile).
[[nodiscard]] ProfilePoint isoperimetric_profile(const CurvatureParams& p,
                                                 double v,
                                                 const QuadratureConfig& cfg = {},
                                                 const InversionConfig& inv = {});

// Profile value in the closed-up case K = N - 1, D = pi, where the boundary
// function reduces to sin(x)^{N-1} / k_pi.
[[nodiscard]] double sphere_boundary_profile(double N, double v,
                                             const QuadratureConfig& cfg = {},
                                             const InversionConfig& inv = {});

struct DMonotonicityReport {
  std::vector<double> D_grid;
  std::vector<double> values;
  bool strictly_decreasing;
  double slack;
};

// Evaluates D -> profile(v) over an ascending diameter grid and checks
// strict decrease (consecutive drop of more than slack). Requires K <= 0.
[[nodiscard]] DMonotonicityReport profile_D_monotonicity(
    double K, double N, double v, const std::vector<double>& D_grid,
    const QuadratureConfig& cfg = {}, const InversionConfig& inv = {},
    double slack = 1e-10);

}  // namespace mcp1d
