#include "mcp1d/needles.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace mcp1d {

namespace {

constexpr double kDegenerateMass = 1e-12;

// Uniform double in [0, 1) with the full 53-bit mantissa; keeps generated
// decompositions byte-reproducible across platforms.
double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct NeedleTerm {
  double mass = 0.0;
  double content = 0.0;
  double bound = 0.0;
  bool flagged = false;
};

NeedleTerm needle_term(const Needle& q, const CurvatureParams& p,
                       const QuadratureConfig& cfg, const InversionConfig& inv) {
  NeedleTerm term;
  const Density1D density = q.density.build(p.K, p.N, q.length);
  term.mass = set_measure(q.trace, density, cfg);
  term.content = minkowski_content(q.trace, density);
  if (term.mass <= kDegenerateMass || term.mass >= 1.0 - kDegenerateMass) {
    term.flagged = q.weight > 0.0;
    term.bound = 0.0;  // profile limit at mass 0 or 1
    return term;
  }
  const CurvatureParams needle_params(p.K, p.N, q.length);
  term.bound = isoperimetric_profile(needle_params, term.mass, cfg, inv).I;
  return term;
}

}  // namespace

Density1D DensitySpec::build(double K, double N, double L,
                             std::size_t cache_n) const {
  if (kind == DensityKind::ClosedFormModel) {
    const ModelDensityParams mp(CurvatureParams(K, N, L), a);
    return model_density(mp, cache_n);
  }
  if (kind == DensityKind::TabulatedGrid) {
    if (x.empty() || std::abs(x.back() - L) > 1e-9 * std::max(1.0, L))
      throw std::invalid_argument("DensitySpec: tabulated grid must cover [0, L]");
    return tabulated_density(x, h, cache_n);
  }
  throw std::invalid_argument("DensitySpec: unsupported density kind");
}

double NeedleDecomposition::weight_sum() const {
  double sum = 0.0;
  for (const Needle& q : needles) sum += q.weight;
  return sum;
}

double NeedleDecomposition::q1_mass() const {
  double sum = 0.0;
  for (const Needle& q : needles)
    if (q.length < 0.5 * params.D) sum += q.weight;
  return sum;
}

double decomposed_measure(const NeedleDecomposition& dec,
                          const std::vector<IntervalSet>& sets,
                          const QuadratureConfig& cfg) {
  if (sets.size() != dec.needles.size())
    throw std::invalid_argument("decomposed_measure: one set per needle required");
  double total = 0.0;
  for (std::size_t i = 0; i < dec.needles.size(); ++i) {
    const Needle& q = dec.needles[i];
    const Density1D density = q.density.build(dec.params.K, dec.params.N, q.length);
    total += q.weight * set_measure(sets[i], density, cfg);
  }
  return total;
}

AggregateBound aggregate_profile_bound(const NeedleDecomposition& dec,
                                       const QuadratureConfig& cfg,
                                       const InversionConfig& inv) {
  AggregateBound out{0.0, {}};
  for (std::size_t i = 0; i < dec.needles.size(); ++i) {
    const NeedleTerm term = needle_term(dec.needles[i], dec.params, cfg, inv);
    if (term.flagged) out.flagged.push_back(i);
    out.value += dec.needles[i].weight * term.bound;
  }
  return out;
}

LocalizedReport check_localized_inequality(const NeedleDecomposition& dec,
                                           const QuadratureConfig& cfg,
                                           const InversionConfig& inv) {
  LocalizedReport report{};
  for (std::size_t i = 0; i < dec.needles.size(); ++i) {
    const NeedleTerm term = needle_term(dec.needles[i], dec.params, cfg, inv);
    if (term.flagged) report.flagged.push_back(i);
    report.lhs += dec.needles[i].weight * term.content;
    report.rhs += dec.needles[i].weight * term.bound;
  }
  report.slack = report.lhs - report.rhs;
  report.pass = report.lhs >= report.rhs - 1e-8;
  report.weight_sum = dec.weight_sum();
  report.residual_mass = dec.residual_mass;
  report.c_measured = dec.delta > 0.0 ? dec.residual_mass / dec.delta : 0.0;
  report.q1_mass = dec.q1_mass();
  return report;
}

double ball_growth(const Density1D& h, double x, double D, double r,
                   const QuadratureConfig& cfg) {
  if (!(r > 0.0 && r <= D)) throw std::domain_error("ball_growth: need 0 < r <= D");
  const double dom = h.domain_length();
  if (!(x >= 0.0 && x <= dom))
    throw std::domain_error("ball_growth: center outside the segment");
  const auto clipped_mass = [&](double radius) {
    return h.mass(x - radius, x + radius, cfg);
  };
  return clipped_mass(r) / clipped_mass(D);
}

double sharpness_ratio(const CurvatureParams& p, double a,
                       const QuadratureConfig& cfg) {
  const ModelDensityParams mp(p, a);
  const double v = needle_mass(mp, cfg);
  if (!(v < 0.5))
    throw std::domain_error("sharpness_ratio: split mass must stay below 1/2");
  const double vol = model_volume(p, p.D, cfg);
  const double content = vol * f_boundary(p, a, cfg);
  const double mass = vol * v;
  const double bound = std::pow(p.N * omega(p.N), 1.0 / p.N) *
                       std::pow(mass, (p.N - 1.0) / p.N);
  return bound / content;
}

TheoremReport verify_theorem_conclusion(const Density1D& h, double xbar,
                                        const CurvatureParams& p,
                                        const IntervalSet& E, double delta,
                                        const TheoremOptions& opt,
                                        const QuadratureConfig& cfg) {
  const double dom = h.domain_length();
  if (!(xbar >= 0.0 && xbar <= dom))
    throw std::domain_error("verify_theorem_conclusion: center outside the segment");
  if (!(delta > 0.0))
    throw std::domain_error("verify_theorem_conclusion: delta must be positive");

  TheoremReport report;
  report.delta = delta;

  const double tol = 1e-12 * std::max(1.0, dom);
  bool e_in_ball = true;
  for (const Interval& iv : E.intervals())
    if (iv.l < xbar - delta - tol || iv.r > xbar + delta + tol) e_in_ball = false;
  report.assumptions.emplace_back("E_in_ball", e_in_ball);

  const auto ball_mass = [&](double radius) {
    return h.mass(xbar - radius, xbar + radius, cfg);
  };
  const double vol_D = model_volume(p, p.D, cfg);
  const bool mass_ok = ball_mass(p.D) >= vol_D * (1.0 - 1e-9);
  report.assumptions.emplace_back("ball_mass", mass_ok);

  if (opt.density_ratio_check) {
    const double r = delta / 10.0;
    const double ratio = ball_mass(r) / (omega(p.N) * std::pow(r, p.N));
    report.assumptions.emplace_back("density_ratio", ratio <= 1.0 + opt.eta);
  }

  bool assumptions_ok = true;
  for (const auto& [name, ok] : report.assumptions) assumptions_ok = assumptions_ok && ok;

  report.mass = set_measure(E, h, cfg);
  if (E.empty_set() || report.mass <= 0.0) {
    report.skipped = true;
    report.pass = assumptions_ok;
    return report;
  }

  report.content = minkowski_content(E, h);
  report.bound = std::pow(p.N * omega(p.N), 1.0 / p.N) *
                 std::pow(report.mass, (p.N - 1.0) / p.N);
  report.psi_eff = 1.0 - report.content / report.bound;
  report.pass = assumptions_ok &&
                (!opt.psi_band || *report.psi_eff <= *opt.psi_band);
  return report;
}

namespace {

NeedleDecomposition generate(const CurvatureParams& p, double delta,
                             std::size_t n_needles, std::uint64_t seed,
                             bool optimal) {
  if (!(delta > 0.0)) throw std::domain_error("generator: delta must be positive");
  if (n_needles == 0) throw std::invalid_argument("generator: need at least one needle");
  double max_len = p.D + delta;
  if (p.K > 0.0)
    max_len = std::min(max_len, conjugate_radius(p.K, p.N) * (1.0 - 1e-6));
  if (!(max_len > 0.5 * p.D))
    throw std::domain_error("generator: no admissible needle lengths");

  std::mt19937_64 rng(seed);
  std::vector<double> raw(n_needles);
  for (double& w : raw) w = 0.1 + next_uniform(rng);
  const double residual = std::min(0.5 * delta * next_uniform(rng), 0.5);
  double raw_sum = 0.0;
  for (const double w : raw) raw_sum += w;

  NeedleDecomposition dec{p, delta, residual, {}};
  dec.needles.reserve(n_needles);
  for (std::size_t i = 0; i < n_needles; ++i) {
    Needle q;
    q.weight = (1.0 - residual) * raw[i] / raw_sum;
    q.length = 0.5 * p.D + next_uniform(rng) * (max_len - 0.5 * p.D);
    q.density.kind = DensityKind::ClosedFormModel;
    q.density.a = q.length * (0.05 + 0.9 * next_uniform(rng));
    const double empty_draw = next_uniform(rng);
    const double u1 = next_uniform(rng) * q.length;
    const double u2 = next_uniform(rng) * q.length;
    if (optimal) {
      q.trace = IntervalSet({{0.0, q.density.a}});
    } else if (empty_draw < 0.1) {
      q.trace = IntervalSet();
    } else {
      q.trace = IntervalSet({{std::min(u1, u2), std::max(u1, u2)}});
    }
    q.ball_trace = IntervalSet({{0.0, std::min(p.D, q.length)}});
    q.center_distance = next_uniform(rng) * delta;
    dec.needles.push_back(std::move(q));
  }
  return dec;
}

}  // namespace

NeedleDecomposition random_decomposition(const CurvatureParams& p, double delta,
                                         std::size_t n_needles,
                                         std::uint64_t seed) {
  return generate(p, delta, n_needles, seed, false);
}

NeedleDecomposition optimal_decomposition(const CurvatureParams& p, double delta,
                                          std::size_t n_needles,
                                          std::uint64_t seed) {
  return generate(p, delta, n_needles, seed, true);
}

}  // namespace mcp1d
