#include "mcp1d/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "boundary_split.hpp"
#include "mcp1d/root_find.hpp"

namespace mcp1d {

namespace {

// Mass-units stop for the inverter: the stated ceiling, tightened to a
// relative target at small masses so the recovered split point keeps full
// relative accuracy where the profile is steep.
double inversion_tol(double v, double ceiling) {
  const double small_side = std::min(v, 1.0 - v);
  return std::min(ceiling, std::max(1e-15, 1e-6 * small_side));
}

double mass_of_split(const CurvatureParams& p, double a,
                     const QuadratureConfig& cfg) {
  const detail::BoundarySplit s = detail::boundary_split(p, a, cfg);
  return s.A / (s.A + s.B);
}

double invert_mass(const CurvatureParams& p, double v,
                   const QuadratureConfig& cfg, const InversionConfig& inv) {
  if (!(v > 0.0 && v < 1.0))
    throw std::domain_error("inverse_mass: v must lie in (0, 1)");
  const double eps = 1e-12;
  const double lo = eps * p.D;
  const double hi = (1.0 - eps) * p.D;
  const double kD = k_const(p, p.D, cfg);
  const double seed =
      std::clamp(std::pow(kD * v, 1.0 / p.N), lo, hi);
  RootConfig rcfg;
  rcfg.f_tol = inversion_tol(v, inv.tol);
  rcfg.max_iter = inv.max_iter;
  const auto g = [&](double a) { return mass_of_split(p, a, cfg) - v; };
  return find_root(g, lo, hi, seed, rcfg);
}

}  // namespace

double needle_mass(const ModelDensityParams& mp, const QuadratureConfig& cfg) {
  return mass_of_split(mp.params, mp.a, cfg);
}

double inverse_mass(const CurvatureParams& p, double v,
                    const QuadratureConfig& cfg, const InversionConfig& inv) {
  return invert_mass(p, v, cfg, inv);
}

ProfilePoint isoperimetric_profile(const CurvatureParams& p, double v,
                                   const QuadratureConfig& cfg,
                                   const InversionConfig& inv) {
  if (p.K > 0.0 && p.D >= conjugate_radius(p.K, p.N) * (1.0 - 1e-12))
    throw std::domain_error(
        "isoperimetric_profile: closed-up configuration, use sphere_boundary_profile");
  const double a = invert_mass(p, v, cfg, inv);
  const detail::BoundarySplit s = detail::boundary_split(p, a, cfg);
  const double I = 1.0 / (s.A + s.B);
  const double kD = k_const(p, p.D, cfg);
  const double I_asym =
      std::pow(kD, -1.0 / p.N) * std::pow(v, (p.N - 1.0) / p.N);
  return {v, a, I, I_asym};
}

double sphere_boundary_profile(double N, double v, const QuadratureConfig& cfg,
                               const InversionConfig& inv) {
  const CurvatureParams p(N - 1.0, N, std::numbers::pi);
  const double a = invert_mass(p, v, cfg, inv);
  const detail::BoundarySplit s = detail::boundary_split(p, a, cfg);
  return 1.0 / (s.A + s.B);
}

DMonotonicityReport profile_D_monotonicity(double K, double N, double v,
                                           const std::vector<double>& D_grid,
                                           const QuadratureConfig& cfg,
                                           const InversionConfig& inv,
                                           double slack) {
  if (K > 0.0)
    throw std::domain_error("profile_D_monotonicity: stated for K <= 0 only");
  if (D_grid.empty())
    throw std::invalid_argument("profile_D_monotonicity: empty diameter grid");
  if (!std::is_sorted(D_grid.begin(), D_grid.end()))
    throw std::invalid_argument("profile_D_monotonicity: grid must ascend");

  DMonotonicityReport report;
  report.D_grid = D_grid;
  report.slack = slack;
  report.values.reserve(D_grid.size());
  for (const double D : D_grid) {
    const CurvatureParams p(K, N, D);
    report.values.push_back(isoperimetric_profile(p, v, cfg, inv).I);
  }
  report.strictly_decreasing = true;
  for (std::size_t i = 1; i < report.values.size(); ++i)
    if (!(report.values[i] < report.values[i - 1] - slack))
      report.strictly_decreasing = false;
  return report;
}

}  // namespace mcp1d
