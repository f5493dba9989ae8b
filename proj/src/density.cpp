#include "mcp1d/density.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "boundary_split.hpp"

namespace mcp1d {

Density1D::Density1D(double domain_length, std::function<double(double)> eval,
                     DensityKind kind, std::size_t cache_n,
                     std::vector<double> breakpoints)
    : D_(domain_length), eval_(std::move(eval)), kind_(kind) {
  if (!(D_ > 0.0) || !std::isfinite(D_))
    throw std::domain_error("Density1D: domain length must be positive");
  if (!eval_) throw std::invalid_argument("Density1D: missing evaluation map");
  cache_n = std::max<std::size_t>(cache_n, 16);
  cache_.resize(cache_n + 1);
  for (std::size_t i = 0; i <= cache_n; ++i) {
    const double x = D_ * static_cast<double>(i) / static_cast<double>(cache_n);
    const double v = eval_(std::min(x, D_));
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("Density1D: values must be finite and nonnegative");
    cache_[i] = v;
  }
  for (const double b : breakpoints)
    if (std::isfinite(b) && b > 0.0 && b < D_) breaks_.push_back(b);
  std::sort(breaks_.begin(), breaks_.end());
  breaks_.erase(std::unique(breaks_.begin(), breaks_.end()), breaks_.end());
}

double Density1D::operator()(double x) const {
  const double slop = 1e-12 * std::max(1.0, D_);
  if (x < -slop || x > D_ + slop)
    throw std::domain_error("Density1D: point outside [0, domain_length]");
  return eval_(std::clamp(x, 0.0, D_));
}

double Density1D::grid_sup() const {
  return *std::max_element(cache_.begin(), cache_.end());
}

double Density1D::mass(double lo, double hi, const QuadratureConfig& cfg) const {
  lo = std::clamp(lo, 0.0, D_);
  hi = std::clamp(hi, 0.0, D_);
  if (!(hi > lo)) return 0.0;
  double total = 0.0;
  double left = lo;
  const auto f = [this](double x) { return eval_(x); };
  for (const double b : breaks_) {
    if (b <= left) continue;
    if (b >= hi) break;
    total += integrate(f, left, b, cfg);
    left = b;
  }
  total += integrate(f, left, hi, cfg);
  return total;
}

ModelDensityParams::ModelDensityParams(CurvatureParams p, double a_)
    : params(p), a(a_) {
  if (!(a > 0.0 && a < params.D))
    throw std::domain_error("ModelDensityParams: a must lie in (0, D)");
}

double f_boundary(const CurvatureParams& p, double x,
                  const QuadratureConfig& cfg) {
  if (!(x >= 0.0 && x <= p.D))
    throw std::domain_error("f_boundary: x outside [0, D]");
  if (x == 0.0 || x == p.D) return 0.0;
  const detail::BoundarySplit s = detail::boundary_split(p, x, cfg);
  return 1.0 / (s.A + s.B);
}

Density1D model_density(const ModelDensityParams& mp, std::size_t cache_n,
                        const QuadratureConfig& cfg) {
  const CurvatureParams p = mp.params;
  const double a = mp.a;
  const double fa = f_boundary(p, a, cfg);
  const double Nm1 = p.N - 1.0;
  const double left_den = std::pow(s_kappa(p.kappa, p.D - a), Nm1);
  const double right_den = std::pow(s_kappa(p.kappa, a), Nm1);
  auto eval = [p, a, fa, Nm1, left_den, right_den](double x) {
    if (x <= a) return fa * std::pow(s_kappa(p.kappa, p.D - x), Nm1) / left_den;
    return fa * std::pow(s_kappa(p.kappa, x), Nm1) / right_den;
  };
  return Density1D(p.D, eval, DensityKind::ClosedFormModel, cache_n, {a});
}

Density1D constant_density(double domain_length, double value, std::size_t cache_n) {
  if (!(domain_length > 0.0))
    throw std::domain_error("constant_density: domain length must be positive");
  if (!(value >= 0.0) || !std::isfinite(value))
    throw std::domain_error("constant_density: value must be finite and nonnegative");
  return Density1D(
      domain_length, [value](double) { return value; },
      DensityKind::UserSupplied, cache_n);
}

Density1D tabulated_density(std::vector<double> x, std::vector<double> h,
                            std::size_t cache_n) {
  if (x.size() != h.size() || x.size() < 2)
    throw std::invalid_argument("tabulated_density: need matching columns, >= 2 rows");
  if (std::abs(x.front()) > 1e-12)
    throw std::invalid_argument("tabulated_density: grid must start at 0");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(h[i]) || h[i] < 0.0)
      throw std::invalid_argument("tabulated_density: values must be finite and nonnegative");
    if (i > 0 && !(x[i] > x[i - 1]))
      throw std::invalid_argument("tabulated_density: grid must be strictly increasing");
  }
  x.front() = 0.0;
  const double D = x.back();
  auto xs = std::make_shared<const std::vector<double>>(std::move(x));
  auto hs = std::make_shared<const std::vector<double>>(std::move(h));
  auto eval = [xs, hs](double q) {
    const auto& xv = *xs;
    const auto& hv = *hs;
    if (q <= xv.front()) return hv.front();
    if (q >= xv.back()) return hv.back();
    const auto it = std::upper_bound(xv.begin(), xv.end(), q);
    const std::size_t i = static_cast<std::size_t>(it - xv.begin());
    const double t = (q - xv[i - 1]) / (xv[i] - xv[i - 1]);
    return hv[i - 1] + t * (hv[i] - hv[i - 1]);
  };
  std::vector<double> knots(xs->begin() + 1, xs->end() - 1);
  return Density1D(D, eval, DensityKind::TabulatedGrid, cache_n, std::move(knots));
}

Density1D density_from_csv(const std::string& path, std::size_t cache_n) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("density_from_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("density_from_csv: missing header row");
  std::vector<double> xs;
  std::vector<double> hs;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string x_str;
    std::string h_str;
    if (!std::getline(row, x_str, ',') || !std::getline(row, h_str))
      throw std::invalid_argument("density_from_csv: malformed row at line " +
                                  std::to_string(line_no));
    try {
      xs.push_back(std::stod(x_str));
      hs.push_back(std::stod(h_str));
    } catch (const std::exception&) {
      throw std::invalid_argument("density_from_csv: non-numeric value at line " +
                                  std::to_string(line_no));
    }
  }
  return tabulated_density(std::move(xs), std::move(hs), cache_n);
}

namespace {

constexpr double kMcpSlack = 1e-9;
constexpr std::size_t kMaxStoredViolations = 256;

// Margin lhs - rhs of the contraction inequality at one triple; -inf when
// the comparison coefficient blows up against positive density.
double mcp_margin(const Density1D& h, const CurvatureParams& p, double x0,
                  double x1, double t, McpViolation* out) {
  const double x = t * x1 + (1.0 - t) * x0;
  const double lhs = h(x);
  const double h0 = h(x0);
  const double s = sigma(1.0 - t, std::abs(x1 - x0), p);
  double rhs;
  if (h0 == 0.0) {
    rhs = 0.0;
  } else if (std::isinf(s)) {
    rhs = std::numeric_limits<double>::infinity();
  } else {
    rhs = std::pow(s, p.N - 1.0) * h0;
  }
  const double margin = lhs - rhs;
  if (out) *out = {x0, x1, t, lhs, rhs, margin};
  return margin;
}

}  // namespace

McpReport check_mcp_density(const Density1D& h, const CurvatureParams& p,
                            std::size_t grid_n) {
  if (grid_n < 2) throw std::invalid_argument("check_mcp_density: grid_n must be >= 2");
  const double D = h.domain_length();
  const std::size_t g = grid_n;
  const double step = D / static_cast<double>(g - 1);
  const double tstep = 1.0 / static_cast<double>(g - 1);

  McpReport report;
  report.slack = kMcpSlack;
  report.grid_n = grid_n;
  report.worst_margin = std::numeric_limits<double>::infinity();
  McpViolation worst{};
  std::vector<McpViolation> violations;

  for (std::size_t i0 = 0; i0 < g; ++i0) {
    const double x0 = step * static_cast<double>(i0);
    for (std::size_t i1 = 0; i1 < g; ++i1) {
      if (i1 == i0) continue;
      const double x1 = step * static_cast<double>(i1);
      for (std::size_t j = 0; j < g; ++j) {
        const double t = tstep * static_cast<double>(j);
        McpViolation rec;
        const double margin = mcp_margin(h, p, x0, x1, t, &rec);
        if (margin < report.worst_margin) {
          report.worst_margin = margin;
          worst = rec;
        }
        if (margin < -kMcpSlack) violations.push_back(rec);
      }
    }
  }
  report.worst = worst;

  // Local refinement: shrink a sample box around the worst lattice triple.
  double refined = report.worst_margin;
  if (std::isfinite(worst.x0)) {
    double cx0 = worst.x0;
    double cx1 = worst.x1;
    double ct = worst.t;
    double wx = step;
    double wt = tstep;
    for (int pass = 0; pass < 24; ++pass) {
      double best = std::numeric_limits<double>::infinity();
      double bx0 = cx0, bx1 = cx1, bt = ct;
      for (int a = -2; a <= 2; ++a) {
        const double x0 = std::clamp(cx0 + wx * 0.5 * a, 0.0, D);
        for (int b = -2; b <= 2; ++b) {
          const double x1 = std::clamp(cx1 + wx * 0.5 * b, 0.0, D);
          if (x0 == x1) continue;
          for (int c = -2; c <= 2; ++c) {
            const double t = std::clamp(ct + wt * 0.5 * c, 0.0, 1.0);
            McpViolation rec;
            const double margin = mcp_margin(h, p, x0, x1, t, &rec);
            if (margin < best) {
              best = margin;
              bx0 = x0;
              bx1 = x1;
              bt = t;
            }
          }
        }
      }
      if (best < refined) refined = best;
      cx0 = bx0;
      cx1 = bx1;
      ct = bt;
      wx *= 0.6;
      wt *= 0.6;
    }
  }
  report.refined_margin = refined;

  report.violation_count = violations.size();
  std::sort(violations.begin(), violations.end(),
            [](const McpViolation& a, const McpViolation& b) {
              if (a.margin != b.margin) return a.margin < b.margin;
              if (a.x0 != b.x0) return a.x0 < b.x0;
              if (a.x1 != b.x1) return a.x1 < b.x1;
              return a.t < b.t;
            });
  if (violations.size() > kMaxStoredViolations)
    violations.resize(kMaxStoredViolations);
  report.violations = std::move(violations);
  report.pass = report.violation_count == 0 && report.refined_margin >= -kMcpSlack;
  return report;
}

double density_sup_bound(const CurvatureParams& p, double L,
                         const QuadratureConfig& cfg) {
  if (!(L > 0.0)) throw std::domain_error("density_sup_bound: L must be positive");
  if (p.K > 0.0 && L >= conjugate_radius(p.K, p.N) * (1.0 - 1e-12))
    throw std::domain_error("density_sup_bound: L at or beyond the conjugate radius");
  const double sL = s_kappa(p.kappa, L);
  const double kappa = p.kappa;
  const double Nm1 = p.N - 1.0;
  const double integral = integrate(
      [kappa, Nm1, sL, L](double t) {
        return std::pow(s_kappa(kappa, t * L) / sL, Nm1);
      },
      0.0, 1.0, cfg);
  return 1.0 / (L * integral);
}

double bishop_gromov_ratio(const Density1D& h, double center, double r,
                           const CurvatureParams& p,
                           const QuadratureConfig& cfg) {
  if (!(r > 0.0)) throw std::domain_error("bishop_gromov_ratio: r must be positive");
  if (!(center >= 0.0 && center <= h.domain_length()))
    throw std::domain_error("bishop_gromov_ratio: center outside [0, D]");
  return h.mass(center - r, center + r, cfg) / model_volume(p, r, cfg);
}

}  // namespace mcp1d
