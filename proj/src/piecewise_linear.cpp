#include "fracl/piecewise_linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace fracl {

double PwLinear::operator()(double x) const {
  if (xs.empty()) return 0.0;
  if (x < xs.front()) return left_vals.front();
  if (x >= xs.back()) return right_vals.back();
  std::size_t i = std::upper_bound(xs.begin(), xs.end(), x) - xs.begin() - 1;
  if (x == xs[i]) return right_vals[i];
  double t = (x - xs[i]) / (xs[i + 1] - xs[i]);
  return right_vals[i] + t * (left_vals[i + 1] - right_vals[i]);
}

PwLinear PwLinear::constant(double c) { return {{0.0}, {c}, {c}}; }

PwLinear PwLinear::interpolant(std::vector<double> xs, std::vector<double> vals) {
  if (xs.size() != vals.size() || xs.empty())
    throw std::invalid_argument("PwLinear::interpolant: bad node data");
  PwLinear f;
  f.xs = std::move(xs);
  f.left_vals = vals;
  f.right_vals = std::move(vals);
  return f;
}

PwLinear PwLinear::step(const std::vector<double>& xs, const std::vector<double>& vals,
                        double left_of_first) {
  if (xs.size() != vals.size()) throw std::invalid_argument("PwLinear::step: bad data");
  if (xs.empty()) return constant(left_of_first);
  PwLinear f;
  f.xs = xs;
  f.right_vals = vals;
  f.left_vals.resize(xs.size());
  f.left_vals[0] = left_of_first;
  for (std::size_t i = 1; i < xs.size(); ++i) f.left_vals[i] = vals[i - 1];
  return f;
}

PwLinear PwLinear::scaled(double a, double b) const {
  PwLinear f = *this;
  for (double& v : f.left_vals) v = a * v + b;
  for (double& v : f.right_vals) v = a * v + b;
  return f;
}

}  // namespace fracl
