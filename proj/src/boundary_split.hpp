#pragma once

#include <cmath>

#include "mcp1d/kernels.hpp"
#include "mcp1d/quadrature.hpp"

namespace mcp1d::detail {

// Left/right integrals entering the boundary profile at x in (0, D):
//   A = integral_{D-x}^{D} s_k(u)^{N-1} du / s_k(D-x)^{N-1}
//   B = integral_{x}^{D}   s_k(u)^{N-1} du / s_k(x)^{N-1}
// giving f(x) = 1/(A+B) and model mass v(x) = A/(A+B).
struct BoundarySplit {
  double A;
  double B;
};

inline BoundarySplit boundary_split(const CurvatureParams& p, double x,
                                    const QuadratureConfig& cfg) {
  const double kappa = p.kappa;
  const double Nm1 = p.N - 1.0;
  const auto integrand = [kappa, Nm1](double u) {
    return std::pow(s_kappa(kappa, u), Nm1);
  };
  const double SA = integrate(integrand, p.D - x, p.D, cfg);
  const double SB = integrate(integrand, x, p.D, cfg);
  const double A = SA / std::pow(s_kappa(kappa, p.D - x), Nm1);
  const double B = SB / std::pow(s_kappa(kappa, x), Nm1);
  return {A, B};
}

}  // namespace mcp1d::detail
