#pragma once

#include <cstddef>
#include <vector>

#include "mcp1d/density.hpp"
#include "mcp1d/quadrature.hpp"

namespace mcp1d {

struct Interval {
  double l;
  double r;
};

// Finite union of disjoint closed intervals in canonical form: sorted,
// endpoints l <= r, overlapping or touching intervals merged. Degenerate
// single points [x, x] are allowed.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> intervals);

  [[nodiscard]] const std::vector<Interval>& intervals() const { return iv_; }
  [[nodiscard]] bool empty_set() const { return iv_.empty(); }
  [[nodiscard]] double total_length() const;

 private:
  std::vector<Interval> iv_;
};

// Sum of integrals of h over the intervals of E.
[[nodiscard]] double set_measure(const IntervalSet& E, const Density1D& h,
                                 const QuadratureConfig& cfg = {});

// eps-enlargement within the segment: every interval widened by eps on both
// sides, clipped to [0, domain_length], merged to canonical form.
[[nodiscard]] IntervalSet enlarge(const IntervalSet& E, double eps,
                                  double domain_length);

// Outer Minkowski content of E under a continuous density: the sum of h over
// boundary points of E inside the open segment (0, D). Boundary points at 0
// or D contribute nothing because enlargement clips there.
[[nodiscard]] double minkowski_content(const IntervalSet& E, const Density1D& h);

// Difference quotient (m(E^eps) - m(E)) / eps cross-validating the exact
// boundary sum.
[[nodiscard]] double minkowski_content_fd(const IntervalSet& E,
                                          const Density1D& h, double eps,
                                          const QuadratureConfig& cfg = {});

struct BruteForceResult {
  double content;
  IntervalSet argmin;
};

// Exhaustive isoperimetric search at mass v for a normalized density:
// candidates are the left-anchored [0, x], the right-anchored [x, D], and
// interior intervals [x_i, y] with x_i on a grid_n lattice, each free
// endpoint adjusted to measure v within 1e-8 by monotone root finding on a
// cumulative-mass table. Ties are broken by smaller left endpoint, then
// smaller right endpoint.
[[nodiscard]] BruteForceResult brute_force_min_content(
    const Density1D& h, double v, std::size_t grid_n,
    const QuadratureConfig& cfg = {});

}  // namespace mcp1d
