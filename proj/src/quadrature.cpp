#include "mcp1d/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mcp1d {

namespace {

// 21-point Kronrod nodes on [0, 1] (odd indices are the embedded 10-point
// Gauss nodes) and the matching weights.
constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr double kWg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a;
  double b;
  double integral;
  double error;
};

}  // namespace

PanelResult gauss_kronrod_21(const std::function<double(double)>& f, double a,
                             double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = kWgk[10] * fc;
  double resg = 0.0;
  for (int j = 0; j < 10; ++j) {
    const double off = h * kXgk[j];
    const double fsum = f(c - off) + f(c + off);
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  return {resk * h, std::abs((resk - resg) * h)};
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg) {
  if (a == b) return 0.0;
  if (a > b) return -integrate(f, b, a, cfg);

  std::vector<Segment> segs;
  segs.reserve(64);
  const PanelResult first = gauss_kronrod_21(f, a, b);
  segs.push_back({a, b, first.integral, first.error});
  double total = first.integral;
  double err = first.error;

  while (static_cast<int>(segs.size()) < cfg.max_segments) {
    if (err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) return total;
    std::size_t worst = 0;
    for (std::size_t i = 1; i < segs.size(); ++i)
      if (segs[i].error > segs[worst].error) worst = i;
    const Segment s = segs[worst];
    const double mid = 0.5 * (s.a + s.b);
    if (mid <= s.a || mid >= s.b) break;  // interval no longer splittable
    const PanelResult left = gauss_kronrod_21(f, s.a, mid);
    const PanelResult right = gauss_kronrod_21(f, mid, s.b);
    total += left.integral + right.integral - s.integral;
    err += left.error + right.error - s.error;
    segs[worst] = {s.a, mid, left.integral, left.error};
    segs.push_back({mid, s.b, right.integral, right.error});
  }
  if (err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) return total;
  throw std::runtime_error("integrate: tolerance not reached within segment budget");
}

}  // namespace mcp1d
