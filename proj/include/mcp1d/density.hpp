#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "mcp1d/kernels.hpp"
#include "mcp1d/quadrature.hpp"

namespace mcp1d {

enum class DensityKind { ClosedFormModel, TabulatedGrid, UserSupplied };

// Nonnegative density on [0, domain_length]. Carries an immutable uniform
// sample cache (built at construction) used for grid suprema and fast
// cumulative-mass tables, plus the interior points where the density is not
// smooth; mass integrals split there so adaptive panels never straddle a
// kink narrower than their node spacing.
class Density1D {
 public:
  Density1D(double domain_length, std::function<double(double)> eval,
            DensityKind kind, std::size_t cache_n = 4096,
            std::vector<double> breakpoints = {});

  [[nodiscard]] double domain_length() const { return D_; }
  [[nodiscard]] DensityKind kind() const { return kind_; }

  // Density value at x; domain error outside [0, domain_length].
  [[nodiscard]] double operator()(double x) const;

  // cache_n + 1 samples at uniform grid points i * D / cache_n.
  [[nodiscard]] const std::vector<double>& cache() const { return cache_; }
  [[nodiscard]] double grid_sup() const;

  // Sorted kink locations strictly inside (0, domain_length).
  [[nodiscard]] const std::vector<double>& breakpoints() const { return breaks_; }

  // Mass of [lo, hi] clipped to the domain, integrated piecewise between
  // breakpoints.
  [[nodiscard]] double mass(double lo, double hi,
                            const QuadratureConfig& cfg = {}) const;

 private:
  double D_;
  std::function<double(double)> eval_;
  DensityKind kind_;
  std::vector<double> cache_;
  std::vector<double> breaks_;
};

// Split point a in (0, D) selecting one member of the optimal model family.
struct ModelDensityParams {
  CurvatureParams params;
  double a;

  ModelDensityParams(CurvatureParams p, double a_);
};

// Boundary profile value: zero at x = 0 and x = D, otherwise the reciprocal
// of  integral_0^x (s_k(D-y)/s_k(D-x))^{N-1} dy
//   + integral_x^D (s_k(y)/s_k(x))^{N-1} dy.
[[nodiscard]] double f_boundary(const CurvatureParams& p, double x,
                                const QuadratureConfig& cfg = {});

// Two-branch model density: f(a) * (s_k(D-x)/s_k(D-a))^{N-1} left of a and
// f(a) * (s_k(x)/s_k(a))^{N-1} right of a; continuous with common value
// f(a) at the split point, and integrates to one.
[[nodiscard]] Density1D model_density(const ModelDensityParams& mp,
                                      std::size_t cache_n = 4096,
                                      const QuadratureConfig& cfg = {});

// Constant density h == value on [0, domain_length].
[[nodiscard]] Density1D constant_density(double domain_length, double value = 1.0,
                                         std::size_t cache_n = 4096);

// Piecewise-linear density through (x_i, h_i); x must start at 0, be
// strictly increasing, and all values must be finite and nonnegative.
[[nodiscard]] Density1D tabulated_density(std::vector<double> x,
                                          std::vector<double> h,
                                          std::size_t cache_n = 4096);

// Two-column CSV (x, h) with a header row.
[[nodiscard]] Density1D density_from_csv(const std::string& path,
                                         std::size_t cache_n = 4096);

struct McpViolation {
  double x0;
  double x1;
  double t;
  double lhs;
  double rhs;
  double margin;  // lhs - rhs; negative means the inequality fails
};

struct McpReport {
  bool pass;
  double slack;            // tolerance absorbed before flagging, 1e-9
  std::size_t grid_n;
  double worst_margin;     // smallest lattice margin
  double refined_margin;   // worst margin after local refinement
  McpViolation worst;      // triple realizing worst_margin
  std::size_t violation_count;
  std::vector<McpViolation> violations;  // worst first, capped
};

// Tests h(t x1 + (1-t) x0) >= sigma^{(1-t)}(|x1 - x0|)^{N-1} h(x0) on a
// grid_n^3 lattice over [0,D]^2 x [0,1] (pairs with x0 = x1 skipped), then
// refines locally around the worst lattice margin.
[[nodiscard]] McpReport check_mcp_density(const Density1D& h,
                                          const CurvatureParams& p,
                                          std::size_t grid_n);

// Universal sup bound for a normalized density on an interval of length L:
// (1/L) * (integral_0^1 sigma^{(t)}(L)^{N-1} dt)^{-1}; equals N/L at K = 0.
[[nodiscard]] double density_sup_bound(const CurvatureParams& p, double L,
                                       const QuadratureConfig& cfg = {});

// m(B_r(center) intersected with [0, D]) / Vol_{K,N}(r) for m = h * Lebesgue.
[[nodiscard]] double bishop_gromov_ratio(const Density1D& h, double center,
                                         double r, const CurvatureParams& p,
                                         const QuadratureConfig& cfg = {});

}  // namespace mcp1d
