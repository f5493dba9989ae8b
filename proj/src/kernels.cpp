#include "mcp1d/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace mcp1d {

namespace {

constexpr double kPi = std::numbers::pi;

// Admits the exact closed-up configuration with a little float headroom.
bool is_boundary_case(double K, double N, double D) {
  return std::abs(K - (N - 1.0)) <= 1e-9 && std::abs(D - kPi) <= 1e-9;
}

}  // namespace

double conjugate_radius(double K, double N) {
  if (K <= 0.0) return std::numeric_limits<double>::infinity();
  return kPi * std::sqrt((N - 1.0) / K);
}

CurvatureParams::CurvatureParams(double K_, double N_, double D_)
    : K(K_), N(N_), D(D_), kappa(K_ / (N_ - 1.0)) {
  if (!(N > 1.0)) throw std::domain_error("CurvatureParams: N must exceed 1");
  if (!(D > 0.0)) throw std::domain_error("CurvatureParams: D must be positive");
  if (!std::isfinite(K) || !std::isfinite(N) || !std::isfinite(D))
    throw std::domain_error("CurvatureParams: parameters must be finite");
  if (K > 0.0 && D >= conjugate_radius(K, N) && !is_boundary_case(K, N, D))
    throw std::domain_error(
        "CurvatureParams: D must stay below the conjugate radius for K > 0");
}

double omega(double N) {
  if (!(N > 0.0)) throw std::domain_error("omega: N must be positive");
  return std::pow(kPi, 0.5 * N) / std::tgamma(0.5 * N + 1.0);
}

double s_kappa(double kappa, double x) {
  if (!(x >= 0.0)) throw std::domain_error("s_kappa: x must be nonnegative");
  const double z = kappa * x * x;
  if (std::abs(z) < 1e-4) {
    // sin/sinh share the series x (1 - z/6 + z^2/120 - z^3/5040); the tail
    // is below 1e-19 relative for |z| < 1e-4.
    return x * (1.0 - z / 6.0 + z * z / 120.0 - z * z * z / 5040.0);
  }
  if (kappa > 0.0) {
    const double rk = std::sqrt(kappa);
    if (x > kPi / rk * (1.0 + 1e-12))
      throw std::domain_error("s_kappa: x beyond pi/sqrt(kappa)");
    return std::sin(rk * x) / rk;
  }
  const double rk = std::sqrt(-kappa);
  return std::sinh(rk * x) / rk;
}

double sigma(double t, double theta, const CurvatureParams& p) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("sigma: t outside [0, 1]");
  if (!(theta >= 0.0)) throw std::domain_error("sigma: theta must be nonnegative");
  if (p.K * theta * theta >= (p.N - 1.0) * kPi * kPi)
    return std::numeric_limits<double>::infinity();
  if (theta == 0.0) return t;
  return s_kappa(p.kappa, t * theta) / s_kappa(p.kappa, theta);
}

double tau(double t, double theta, const CurvatureParams& p) {
  if (t == 0.0) {
    if (!(theta >= 0.0)) throw std::domain_error("tau: theta must be nonnegative");
    return 0.0;
  }
  const double s = sigma(t, theta, p);
  if (std::isinf(s)) return s;
  return std::pow(t, 1.0 / p.N) * std::pow(s, (p.N - 1.0) / p.N);
}

double k_const(const CurvatureParams& p, double L, const QuadratureConfig& cfg) {
  if (!(L >= 0.0)) throw std::domain_error("k_const: L must be nonnegative");
  if (p.K > 0.0 && L > conjugate_radius(p.K, p.N) * (1.0 + 1e-12))
    throw std::domain_error("k_const: L beyond the conjugate radius");
  if (L == 0.0) return 0.0;
  const double kappa = p.kappa;
  const double Nm1 = p.N - 1.0;
  return integrate(
      [kappa, Nm1](double t) { return std::pow(s_kappa(kappa, t), Nm1); }, 0.0,
      L, cfg);
}

double model_volume(const CurvatureParams& p, double r,
                    const QuadratureConfig& cfg) {
  if (!(r >= 0.0)) throw std::domain_error("model_volume: r must be nonnegative");
  const double r_eff = std::min(r, conjugate_radius(p.K, p.N));
  return p.N * omega(p.N) * k_const(p, r_eff, cfg);
}

}  // namespace mcp1d
