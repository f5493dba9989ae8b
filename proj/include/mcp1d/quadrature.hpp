#pragma once

#include <functional>

namespace mcp1d {

// Tolerance pair for adaptive integration; the run stops once the summed
// error estimate is below max(abs_tol, rel_tol * |integral|).
struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_segments = 4000;
};

// Preset used where near-machine-precision results are required.
[[nodiscard]] constexpr QuadratureConfig strict_quadrature() {
  return QuadratureConfig{1e-15, 1e-13, 40000};
}

// Single 21-point Gauss-Kronrod rule applied to [a, b]; error is the
// Gauss/Kronrod discrepancy scaled to the interval.
struct PanelResult {
  double integral;
  double error;
};
[[nodiscard]] PanelResult gauss_kronrod_21(const std::function<double(double)>& f,
                                           double a, double b);

// Globally adaptive integration of f over [a, b]: the segment with the
// largest error estimate is bisected until the tolerance target is met.
// Throws std::runtime_error if the segment budget is exhausted first.
[[nodiscard]] double integrate(const std::function<double(double)>& f, double a,
                               double b, const QuadratureConfig& cfg = {});

}  // namespace mcp1d
