#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcp1d/density.hpp"
#include "mcp1d/geometry.hpp"
#include "mcp1d/profile.hpp"

namespace mcp1d {

// Serializable description of a needle's density on [0, L]: either a member
// of the model family (split point a, curvature data supplied by the owning
// decomposition) or a tabulated grid.
struct DensitySpec {
  DensityKind kind = DensityKind::ClosedFormModel;
  double a = 0.0;               // model split point, used when kind is model
  std::vector<double> x;        // tabulated grid, used when kind is tabulated
  std::vector<double> h;

  [[nodiscard]] Density1D build(double K, double N, double L,
                                std::size_t cache_n = 2048) const;
};

// One element of a decomposition: a weighted segment [0, L] in arclength
// coordinates carrying a normalized density, the trace of the tested set E,
// and the trace of the reference ball. center_distance is recorded metadata
// only and never enters any check.
struct Needle {
  double weight = 0.0;
  double length = 0.0;
  DensitySpec density;
  IntervalSet trace;
  IntervalSet ball_trace;
  std::optional<double> center_distance;
};

// Finite weighted family of needles plus the residual mass of the
// complement; weights and residual_mass sum to one.
struct NeedleDecomposition {
  CurvatureParams params;
  double delta = 0.0;
  double residual_mass = 0.0;
  std::vector<Needle> needles;

  [[nodiscard]] double weight_sum() const;
  // Mass carried by needles shorter than D/2.
  [[nodiscard]] double q1_mass() const;
};

// Sum over needles of weight * m_q(set_q), sets given per needle in needle
// coordinates. Throws std::invalid_argument on a needle-count mismatch.
[[nodiscard]] double decomposed_measure(const NeedleDecomposition& dec,
                                        const std::vector<IntervalSet>& sets,
                                        const QuadratureConfig& cfg = {});

struct AggregateBound {
  double value;                        // sum of weight * profile(trace mass)
  std::vector<std::size_t> flagged;    // needles with trace mass 0 or 1
};

// Localized lower bound: sum over needles of weight * I_{K,N,L_q}(m_q(trace)).
// A positive-weight needle whose trace mass is 0 or 1 is flagged and
// contributes zero (profile limit value).
[[nodiscard]] AggregateBound aggregate_profile_bound(
    const NeedleDecomposition& dec, const QuadratureConfig& cfg = {},
    const InversionConfig& inv = {});

struct LocalizedReport {
  double lhs;    // sum of weight * boundary content of the trace
  double rhs;    // aggregate profile bound
  double slack;  // lhs - rhs
  bool pass;     // lhs >= rhs - 1e-8
  std::vector<std::size_t> flagged;
  double weight_sum;
  double residual_mass;
  double c_measured;  // residual_mass / delta
  double q1_mass;
};

[[nodiscard]] LocalizedReport check_localized_inequality(
    const NeedleDecomposition& dec, const QuadratureConfig& cfg = {},
    const InversionConfig& inv = {});

// Normalized ball growth m(B_r(x) in [0, dom]) / m(B_D(x) in [0, dom]) for
// the measure with density h. Requires 0 < r <= D.
[[nodiscard]] double ball_growth(const Density1D& h, double x, double D,
                                 double r, const QuadratureConfig& cfg = {});

// For the measure Vol_{K,N}(D) * h_a and E = [0, a]: the ratio of the
// dimensional bound N^{1/N} omega_N^{1/N} m_a(E)^{(N-1)/N} to the boundary
// content m_a+(E). Decreases to one as a shrinks. Requires v_D(a) < 1/2.
[[nodiscard]] double sharpness_ratio(const CurvatureParams& p, double a,
                                     const QuadratureConfig& cfg = {});

struct TheoremOptions {
  std::optional<double> psi_band;  // asserted only when set
  bool density_ratio_check = false;  // extra check used on the K = N-1 path
  double eta = 0.1;                  // tolerance of the density-ratio check
};

struct TheoremReport {
  bool skipped = false;  // E has zero mass, nothing to assert
  bool pass = false;
  std::optional<double> psi_eff;  // 1 - content / dimensional bound
  double delta = 0.0;
  double mass = 0.0;
  double content = 0.0;
  double bound = 0.0;  // N^{1/N} omega_N^{1/N} mass^{(N-1)/N}
  std::vector<std::pair<std::string, bool>> assumptions;
};

// Measures the isoperimetric deficit of E inside B_delta(xbar) for the
// measure h * Lebesgue on [0, h.domain_length()], after checking the
// standing assumptions (E inside the ball, m(B_D(xbar)) >= Vol_{K,N}(D),
// and optionally the small-ball density ratio at r = delta/10). Assumption
// failures are reported, not thrown.
[[nodiscard]] TheoremReport verify_theorem_conclusion(
    const Density1D& h, double xbar, const CurvatureParams& p,
    const IntervalSet& E, double delta, const TheoremOptions& opt = {},
    const QuadratureConfig& cfg = {});

// Seeded generator: lengths uniform in [D/2, D + delta] (kept inside the
// conjugate radius for K > 0), densities from the model family with random
// split points, random interval traces, residual mass at most delta/2.
[[nodiscard]] NeedleDecomposition random_decomposition(const CurvatureParams& p,
                                                       double delta,
                                                       std::size_t n_needles,
                                                       std::uint64_t seed);

// Same skeleton but every trace is [0, a_q]: the configuration where the
// localized inequality is tight up to inversion tolerance.
[[nodiscard]] NeedleDecomposition optimal_decomposition(const CurvatureParams& p,
                                                        double delta,
                                                        std::size_t n_needles,
                                                        std::uint64_t seed);

}  // namespace mcp1d
