#include "mcp1d/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mcp1d {

IntervalSet::IntervalSet(std::vector<Interval> intervals) : iv_(std::move(intervals)) {
  for (const Interval& iv : iv_) {
    if (!(iv.l <= iv.r) || !std::isfinite(iv.l) || !std::isfinite(iv.r))
      throw std::invalid_argument("IntervalSet: intervals need finite l <= r");
  }
  std::sort(iv_.begin(), iv_.end(), [](const Interval& a, const Interval& b) {
    return a.l != b.l ? a.l < b.l : a.r < b.r;
  });
  std::vector<Interval> merged;
  for (const Interval& iv : iv_) {
    if (!merged.empty() && iv.l <= merged.back().r) {
      merged.back().r = std::max(merged.back().r, iv.r);
    } else {
      merged.push_back(iv);
    }
  }
  iv_ = std::move(merged);
}

double IntervalSet::total_length() const {
  double len = 0.0;
  for (const Interval& iv : iv_) len += iv.r - iv.l;
  return len;
}

double set_measure(const IntervalSet& E, const Density1D& h,
                   const QuadratureConfig& cfg) {
  double mass = 0.0;
  for (const Interval& iv : E.intervals()) mass += h.mass(iv.l, iv.r, cfg);
  return mass;
}

IntervalSet enlarge(const IntervalSet& E, double eps, double domain_length) {
  if (!(eps > 0.0)) throw std::domain_error("enlarge: eps must be positive");
  std::vector<Interval> widened;
  widened.reserve(E.intervals().size());
  for (const Interval& iv : E.intervals())
    widened.push_back({std::max(0.0, iv.l - eps), std::min(domain_length, iv.r + eps)});
  return IntervalSet(std::move(widened));
}

double minkowski_content(const IntervalSet& E, const Density1D& h) {
  const double D = h.domain_length();
  double content = 0.0;
  for (const Interval& iv : E.intervals()) {
    if (iv.l > 0.0 && iv.l < D) content += h(iv.l);
    if (iv.r > 0.0 && iv.r < D) content += h(iv.r);
  }
  return content;
}

double minkowski_content_fd(const IntervalSet& E, const Density1D& h, double eps,
                            const QuadratureConfig& cfg) {
  if (!(eps > 0.0)) throw std::domain_error("minkowski_content_fd: eps must be positive");
  const double grown = set_measure(enlarge(E, eps, h.domain_length()), h, cfg);
  const double base = set_measure(E, h, cfg);
  return (grown - base) / eps;
}

namespace {

// Cumulative-mass table at uniform resolution: prefix sums of per-cell
// Gauss-Kronrod panels, partial cells finished with one extra panel. The
// density is smooth within cells so single panels are near machine precision.
class CdfTable {
 public:
  CdfTable(const Density1D& h, std::size_t cells)
      : h_(h), D_(h.domain_length()), cells_(std::max<std::size_t>(cells, 64)) {
    prefix_.resize(cells_ + 1, 0.0);
    const auto f = [this](double x) { return h_(x); };
    const auto& breaks = h.breakpoints();
    for (std::size_t i = 0; i < cells_; ++i) {
      const double a = D_ * static_cast<double>(i) / static_cast<double>(cells_);
      const double b = D_ * static_cast<double>(i + 1) / static_cast<double>(cells_);
      double cell = 0.0;
      double left = a;
      for (const double br : breaks) {
        if (br <= left) continue;
        if (br >= b) break;
        cell += gauss_kronrod_21(f, left, br).integral;
        left = br;
      }
      cell += gauss_kronrod_21(f, left, b).integral;
      prefix_[i + 1] = prefix_[i] + cell;
    }
  }

  [[nodiscard]] double total() const { return prefix_.back(); }

  [[nodiscard]] double mass(double x) const {
    x = std::clamp(x, 0.0, D_);
    const double pos = x / D_ * static_cast<double>(cells_);
    std::size_t i = std::min(static_cast<std::size_t>(pos), cells_ - 1);
    const double a = D_ * static_cast<double>(i) / static_cast<double>(cells_);
    if (x <= a) return prefix_[i];
    const auto f = [this](double q) { return h_(q); };
    double tail = 0.0;
    double left = a;
    for (const double br : h_.breakpoints()) {
      if (br <= left) continue;
      if (br >= x) break;
      tail += gauss_kronrod_21(f, left, br).integral;
      left = br;
    }
    return prefix_[i] + tail + gauss_kronrod_21(f, left, x).integral;
  }

  // Monotone inverse of mass(): safeguarded Newton with h as derivative.
  [[nodiscard]] double inverse(double target, double mass_tol) const {
    target = std::clamp(target, 0.0, total());
    const auto it = std::upper_bound(prefix_.begin(), prefix_.end(), target);
    std::size_t hi_idx = std::min(
        static_cast<std::size_t>(it - prefix_.begin()), cells_);
    std::size_t lo_idx = hi_idx > 0 ? hi_idx - 1 : 0;
    double lo = D_ * static_cast<double>(lo_idx) / static_cast<double>(cells_);
    double hi = D_ * static_cast<double>(hi_idx) / static_cast<double>(cells_);
    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < 100; ++iter) {
      const double m = mass(x);
      if (std::abs(m - target) <= mass_tol) return x;
      if (m > target) {
        hi = x;
      } else {
        lo = x;
      }
      const double slope = h_(x);
      double next = slope > 0.0 ? x - (m - target) / slope : 0.5 * (lo + hi);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (next == x) break;
      x = next;
    }
    return x;
  }

 private:
  const Density1D& h_;
  double D_;
  std::size_t cells_;
  std::vector<double> prefix_;
};

}  // namespace

BruteForceResult brute_force_min_content(const Density1D& h, double v,
                                         std::size_t grid_n,
                                         const QuadratureConfig&) {
  if (!(v > 0.0 && v < 1.0))
    throw std::domain_error("brute_force_min_content: v must lie in (0, 1)");
  if (grid_n < 2)
    throw std::invalid_argument("brute_force_min_content: grid_n must be >= 2");
  const double D = h.domain_length();
  const double mass_tol = 1e-8;
  const CdfTable table(h, std::max<std::size_t>(4096, 4 * grid_n));
  const double total = table.total();
  const double target = v * total;  // tolerates slightly imperfect normalization

  struct Candidate {
    double content;
    double l;
    double r;
  };
  std::vector<Candidate> candidates;

  const double x_left = table.inverse(target, mass_tol);
  candidates.push_back({h(x_left), 0.0, x_left});
  const double x_right = table.inverse(total - target, mass_tol);
  candidates.push_back({h(x_right), x_right, D});

  for (std::size_t i = 1; i < grid_n; ++i) {
    const double x = D * static_cast<double>(i) / static_cast<double>(grid_n);
    const double right_target = table.mass(x) + target;
    if (right_target >= total - 1e-9) continue;  // degenerates to an anchored set
    const double y = table.inverse(right_target, mass_tol);
    candidates.push_back({h(x) + h(y), x, y});
  }

  const Candidate* best = &candidates.front();
  for (const Candidate& c : candidates) {
    if (c.content < best->content ||
        (c.content == best->content &&
         (c.l < best->l || (c.l == best->l && c.r < best->r))))
      best = &c;
  }
  return {best->content, IntervalSet({{best->l, best->r}})};
}

}  // namespace mcp1d
