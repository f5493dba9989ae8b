#pragma once

#include <functional>

namespace mcp1d {

struct RootConfig {
  double f_tol = 1e-10;  // stop once |f(x)| <= f_tol
  int max_iter = 200;
};

// Safeguarded scalar root finder on a bracket [lo, hi] with f(lo) and f(hi)
// of opposite sign. Alternates secant steps with bisection so the bracket
// shrinks geometrically regardless of f's shape; the optional seed is tried
// as the first probe. Throws std::runtime_error if the root is not bracketed
// or the iteration cap is reached before |f| <= f_tol.
[[nodiscard]] double find_root(const std::function<double(double)>& f, double lo,
                               double hi, double seed, const RootConfig& cfg = {});

}  // namespace mcp1d
