#pragma once

#include <vector>

#include "fracl/piecewise_linear.hpp"

namespace fracl {

/// Right-continuous step function: value vals[i] on [xs[i], xs[i+1]),
/// left_val on (-inf, xs[0]), vals.back() on [xs.back(), inf).  An empty xs
/// means the constant left_val.
struct StepFn {
  std::vector<double> xs;
  std::vector<double> vals;
  double left_val = 0.0;

  double operator()(double x) const;
  double right_limit() const { return vals.empty() ? left_val : vals.back(); }
};

/// Integral of |F - G| against dx/(1+x^2) over the whole line.  On each
/// interval where F is constant and G is linear the constant-difference part
/// uses the arctan antiderivative and the linear part a 5-point Gauss rule
/// (with the interval split at the sign change of F - G, so the integrand is
/// smooth); the tails beyond the last breakpoints are added in closed form
/// from the two functions' limits.  Total weight of the line is pi.
double weighted_l1_distance(const StepFn& f, const PwLinear& g);

/// Same metric restricted by explicit cutoffs: the integrand is integrated
/// exactly on [x_lo, x_hi] and the tails are charged analytically from the
/// function limits (so the result is exact when both inputs are constant
/// outside the window).
double weighted_l1_distance(const StepFn& f, const PwLinear& g, double x_lo, double x_hi);

}  // namespace fracl
