#include "fracl/weighted_l1.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracl {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// 5-point Gauss-Legendre on [-1,1]
constexpr double kGx[5] = {-0.906179845938663993, -0.538469310105683091, 0.0,
                           0.538469310105683091, 0.906179845938663993};
constexpr double kGw[5] = {0.236926885056189088, 0.478628670499366468,
                           0.568888888888888889, 0.478628670499366468,
                           0.236926885056189088};

// integral of x/(1+x^2) over [p,q] by Gauss-5, chunked so each chunk is short
double int_x_over_weight(double p, double q) {
  double len = q - p;
  int chunks = std::max(1, static_cast<int>(std::ceil(len / 0.25)));
  if (chunks > 64) chunks = 64;  // long pieces only arise where the slope is 0
  double total = 0.0;
  for (int c = 0; c < chunks; ++c) {
    double a = p + len * c / chunks;
    double b = p + len * (c + 1) / chunks;
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int k = 0; k < 5; ++k) {
      double x = mid + half * kGx[k];
      s += kGw[k] * x / (1.0 + x * x);
    }
    total += s * half;
  }
  return total;
}

// |integral of (c - a0 - b*(x-u)) / (1+x^2)| over [p,q] subinterval of [u,v],
// assuming the difference does not change sign there
double signed_piece(double c, double a0, double b, double u, double p, double q) {
  double const_part = (c - a0 + b * u) * (std::atan(q) - std::atan(p));
  double lin_part = b * int_x_over_weight(p, q);
  return std::abs(const_part - lin_part);
}

double g_left_limit(const PwLinear& g, double x) {
  if (g.xs.empty()) return 0.0;
  if (x <= g.xs.front()) return g.left_vals.front();
  if (x > g.xs.back()) return g.right_vals.back();
  std::size_t i = std::lower_bound(g.xs.begin(), g.xs.end(), x) - g.xs.begin();
  if (i < g.xs.size() && g.xs[i] == x) return g.left_vals[i];
  --i;
  double t = (x - g.xs[i]) / (g.xs[i + 1] - g.xs[i]);
  return g.right_vals[i] + t * (g.left_vals[i + 1] - g.right_vals[i]);
}

}  // namespace

double StepFn::operator()(double x) const {
  if (xs.empty() || x < xs.front()) return left_val;
  std::size_t i = std::upper_bound(xs.begin(), xs.end(), x) - xs.begin();
  return vals[i - 1];
}

double weighted_l1_distance(const StepFn& f, const PwLinear& g, double x_lo, double x_hi) {
  if (!(x_lo < x_hi)) throw std::invalid_argument("weighted_l1_distance: x_lo >= x_hi");
  if (!std::isfinite(x_lo) || !std::isfinite(x_hi))
    throw std::invalid_argument("weighted_l1_distance: non-finite cutoffs");

  std::vector<double> nodes;
  nodes.push_back(x_lo);
  nodes.push_back(x_hi);
  for (double x : f.xs)
    if (x > x_lo && x < x_hi) nodes.push_back(x);
  for (double x : g.xs)
    if (x > x_lo && x < x_hi) nodes.push_back(x);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  double g_left = g.xs.empty() ? 0.0 : g.left_vals.front();
  double g_right = g.xs.empty() ? 0.0 : g.right_vals.back();
  double total = std::abs(f.left_val - g_left) * (std::atan(x_lo) + kHalfPi) +
                 std::abs(f.right_limit() - g_right) * (kHalfPi - std::atan(x_hi));

  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    double u = nodes[i], v = nodes[i + 1];
    if (!(v > u)) continue;
    double c = f(u);      // F constant on [u, v)
    double a0 = g(u);     // G linear from its right value at u ...
    double a1 = g_left_limit(g, v);  // ... to its left limit at v
    double b = (a1 - a0) / (v - u);
    if (!std::isfinite(c) || !std::isfinite(a0) || !std::isfinite(a1))
      throw std::invalid_argument("weighted_l1_distance: non-finite input values");
    if (b == 0.0) {
      total += std::abs(c - a0) * (std::atan(v) - std::atan(u));
      continue;
    }
    double xstar = u + (c - a0) / b;  // where F - G crosses zero
    if (xstar > u && xstar < v) {
      total += signed_piece(c, a0, b, u, u, xstar);
      total += signed_piece(c, a0, b, u, xstar, v);
    } else {
      total += signed_piece(c, a0, b, u, u, v);
    }
  }
  return total;
}

double weighted_l1_distance(const StepFn& f, const PwLinear& g) {
  double lo = 0.0, hi = 0.0;
  bool any = false;
  auto widen = [&](double x) {
    if (!any) {
      lo = hi = x;
      any = true;
    } else {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  };
  for (double x : f.xs) widen(x);
  for (double x : g.xs) widen(x);
  if (!any) {
    double gc = g.xs.empty() ? 0.0 : g.left_vals.front();
    return std::abs(f.left_val - gc) * std::numbers::pi;
  }
  if (lo == hi) {
    double g_left = g.xs.empty() ? 0.0 : g.left_vals.front();
    double g_right = g.xs.empty() ? 0.0 : g.right_vals.back();
    return std::abs(f.left_val - g_left) * (std::atan(lo) + kHalfPi) +
           std::abs(f.right_limit() - g_right) * (kHalfPi - std::atan(hi));
  }
  return weighted_l1_distance(f, g, lo, hi);
}

}  // namespace fracl
