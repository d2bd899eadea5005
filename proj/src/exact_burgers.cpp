#include "fracl/exact_burgers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracl {

namespace {

// right endpoint of the left (positive) structure: the shock position,
// capped at 0 where the two shocks merge
double shock_pos(double t) {
  double s = t <= 2.0 ? -2.0 + 0.5 * t : -3.0 + std::sqrt(2.0 * t);
  return std::min(s, 0.0);
}

}  // namespace

double exact_inviscid_burgers(double t, double x) {
  if (t < 0.0) throw std::invalid_argument("exact_inviscid_burgers: negative time");
  if (t == 0.0) {
    if (x >= -3.0 && x <= -2.0) return 1.0;
    if (x >= 2.0 && x <= 3.0) return -1.0;
    return 0.0;
  }
  double r = shock_pos(t);
  double u = 0.0;
  if (x >= -3.0 && x <= r) u += std::min((x + 3.0) / t, 1.0);
  if (x >= -r && x <= 3.0) u += std::max((x - 3.0) / t, -1.0);
  return u;
}

PwLinear exact_inviscid_profile(double t) {
  if (t < 0.0) throw std::invalid_argument("exact_inviscid_profile: negative time");
  PwLinear f;
  auto node = [&](double x, double lv, double rv) {
    f.xs.push_back(x);
    f.left_vals.push_back(lv);
    f.right_vals.push_back(rv);
  };
  if (t == 0.0) {
    node(-3.0, 0.0, 1.0);
    node(-2.0, 1.0, 0.0);
    node(2.0, 0.0, -1.0);
    node(3.0, -1.0, 0.0);
    return f;
  }
  double r = shock_pos(t);
  double foot = -3.0 + t;           // where the fan reaches value 1
  double shock_val = std::min((r + 3.0) / t, 1.0);
  if (r <= -3.0) return PwLinear::constant(0.0);  // not reachable for t > 0
  node(-3.0, 0.0, 0.0);
  if (foot < r) {                   // plateau exists (t < 2)
    node(foot, 1.0, 1.0);
    node(r, 1.0, 0.0);
  } else {
    node(r, shock_val, 0.0);
  }
  if (r < 0.0) {
    // gap of zeros between the two structures
    node(-r, 0.0, -shock_val);
  } else {
    // merged standing shock at 0: jump from 3/t to -3/t handled by the node
    f.right_vals.back() = -shock_val;
  }
  if (-foot > -r) {                 // mirror plateau
    node(-foot, -1.0, -1.0);
  }
  node(3.0, 0.0, 0.0);
  return f;
}

}  // namespace fracl
