#pragma once

#include <vector>

namespace fracl {

/// Piecewise-linear function with jump discontinuities allowed at nodes.
/// At node i the function jumps from left_vals[i] to right_vals[i]; on
/// (xs[i], xs[i+1]) it interpolates right_vals[i] -> left_vals[i+1]; outside
/// [xs.front(), xs.back()] it is constant (left_vals.front() / right_vals.back()).
/// Step functions, grid interpolants and the closed-form conservation-law
/// profiles are all instances.
struct PwLinear {
  std::vector<double> xs;
  std::vector<double> left_vals;
  std::vector<double> right_vals;

  double operator()(double x) const;  // right-continuous at jumps

  static PwLinear constant(double c);

  /// Continuous interpolant through (xs[i], vals[i]) with flat extrapolation.
  static PwLinear interpolant(std::vector<double> xs, std::vector<double> vals);

  /// Right-continuous step function: value vals[i] on [xs[i], xs[i+1]), with
  /// left_of_first before xs[0] and vals.back() after xs.back().
  static PwLinear step(const std::vector<double>& xs, const std::vector<double>& vals,
                       double left_of_first = 0.0);

  /// Affine image a*f + b.
  PwLinear scaled(double a, double b) const;
};

}  // namespace fracl
