#include "mcp1d/root_find.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mcp1d {

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double seed, const RootConfig& cfg) {
  if (!(lo < hi)) throw std::runtime_error("find_root: empty bracket");
  double flo = f(lo);
  if (std::abs(flo) <= cfg.f_tol) return lo;
  double fhi = f(hi);
  if (std::abs(fhi) <= cfg.f_tol) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw std::runtime_error("find_root: root not bracketed");

  double x = std::clamp(seed, lo, hi);
  if (x <= lo || x >= hi) x = 0.5 * (lo + hi);
  bool secant_turn = true;  // first probe is the seed, then alternate

  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    const double fx = f(x);
    if (std::abs(fx) <= cfg.f_tol) return x;
    if ((fx > 0.0) == (fhi > 0.0)) {
      hi = x;
      fhi = fx;
    } else {
      lo = x;
      flo = fx;
    }

    double next;
    if (secant_turn && fhi != flo) {
      next = (lo * fhi - hi * flo) / (fhi - flo);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    } else {
      next = 0.5 * (lo + hi);
    }
    secant_turn = !secant_turn;
    if (next <= lo || next >= hi) {
      // bracket collapsed to adjacent doubles; return the better endpoint
      return std::abs(flo) <= std::abs(fhi) ? lo : hi;
    }
    x = next;
  }
  throw std::runtime_error("find_root: iteration cap reached");
}

}  // namespace mcp1d
