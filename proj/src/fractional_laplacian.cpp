#include "fracl/fractional_laplacian.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracl {

Grid1D Grid1D::from_function(double x_min, double x_max, int m,
                             const std::function<double(double)>& f) {
  if (!(x_max > x_min) || m < 2) throw std::invalid_argument("Grid1D: bad domain");
  Grid1D g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.m = m;
  g.values.resize(m);
  for (int i = 0; i < m; ++i) g.values[i] = f(g.center(i));
  return g;
}

double c_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 2.0))
    throw std::invalid_argument("c_alpha: requires alpha in (0,2)");
  return std::pow(2.0, alpha - 1.0) * alpha *
         std::exp(std::lgamma((1.0 + alpha) / 2.0) - std::lgamma(1.0 - alpha / 2.0)) /
         std::sqrt(std::numbers::pi);
}

namespace {

bool boundary_not_decayed(const Grid1D& g) {
  double peak = 0.0;
  for (double v : g.values) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return false;
  int guard = std::max(1, g.m / 64);
  double edge = 0.0;
  for (int i = 0; i < guard; ++i) {
    edge = std::max(edge, std::abs(g.values[i]));
    edge = std::max(edge, std::abs(g.values[g.m - 1 - i]));
  }
  return edge > 1e-8 * peak;
}

Grid1D spectral_apply(const Grid1D& g, double alpha) {
  const int m = g.m;
  const double length = g.x_max - g.x_min;
  std::vector<double> in(g.values);
  std::vector<fftw_complex> freq(m / 2 + 1);
  fftw_plan fwd = fftw_plan_dft_r2c_1d(m, in.data(), freq.data(), FFTW_ESTIMATE);
  fftw_execute(fwd);
  fftw_destroy_plan(fwd);
  for (int k = 0; k <= m / 2; ++k) {
    double xi = 2.0 * std::numbers::pi * k / length;
    double mult = std::pow(xi, alpha) / m;  // 1/m undoes FFTW's scaling
    freq[k][0] *= mult;
    freq[k][1] *= mult;
  }
  Grid1D out = g;
  fftw_plan bwd = fftw_plan_dft_c2r_1d(m, freq.data(), out.values.data(), FFTW_ESTIMATE);
  fftw_execute(bwd);
  fftw_destroy_plan(bwd);
  return out;
}

Grid1D quadrature_apply(const Grid1D& g, double alpha, const QuadOpts& opts) {
  const double dx = g.dx();
  auto cell_value = [&](int i) -> double {
    return (i >= 0 && i < g.m) ? g.values[i] : 0.0;
  };
  auto interp = [&](double x) -> double {
    // Catmull-Rom through the cell values (0 outside the grid); the kernel
    // divides by z^{1+alpha}, so sub-O(dx^2) interpolation accuracy matters
    double s = (x - g.x_min) / dx - 0.5;
    if (s <= -1.0 || s >= g.m) return 0.0;
    int i = static_cast<int>(std::floor(s));
    double t = s - i;
    double p0 = cell_value(i - 1), p1 = cell_value(i), p2 = cell_value(i + 1),
           p3 = cell_value(i + 2);
    return p1 + 0.5 * t * (p2 - p0 +
                           t * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 +
                                t * (3.0 * (p1 - p2) + p3 - p0)));
  };
  const double ca = c_alpha(alpha);
  const double z0 = std::max(opts.z0, dx);  // below the grid scale: Taylor term
  Grid1D out = g;
  for (int i = 0; i < g.m; ++i) {
    double x = g.center(i);
    double y_max = opts.y_max > 0.0
                       ? opts.y_max
                       : std::max(x - (g.x_min - dx), (g.x_max + dx) - x);
    // fourth-order second difference
    double fxx = (-cell_value(i - 2) + 16.0 * cell_value(i - 1) - 30.0 * cell_value(i) +
                  16.0 * cell_value(i + 1) - cell_value(i + 2)) /
                 (12.0 * dx * dx);
    double integral =
        symmetric_singular_integral(interp, x, alpha, fxx, z0, y_max, opts.cells);
    integral += -2.0 * g.values[i] * std::pow(y_max, -alpha) / alpha;  // zero tail
    out.values[i] = -ca * integral;
  }
  return out;
}

}  // namespace

double symmetric_singular_integral(const std::function<double(double)>& f, double x,
                                   double alpha, double fxx, double z0, double y_max,
                                   int cells) {
  if (!(y_max > z0)) return fxx * std::pow(y_max, 2.0 - alpha) / (2.0 - alpha);
  double total = fxx * std::pow(z0, 2.0 - alpha) / (2.0 - alpha);
  const double fx2 = 2.0 * f(x);
  const double s0 = std::log(z0), s1 = std::log(y_max);
  const double ds = (s1 - s0) / cells;
  for (int j = 0; j < cells; ++j) {
    double z = std::exp(s0 + (j + 0.5) * ds);
    total += (f(x + z) + f(x - z) - fx2) * std::pow(z, -alpha) * ds;
  }
  return total;
}

double fractional_laplacian_at(const std::function<double(double)>& f, double x,
                               double alpha, double support_lo, double support_hi,
                               const QuadOpts& opts) {
  double y_max = opts.y_max > 0.0 ? opts.y_max
                                  : std::max(x - support_lo, support_hi - x);
  if (y_max <= 0.0) y_max = support_hi - support_lo;
  double d = 1e-4 * std::max(1.0, std::abs(x));
  double fxx = (f(x + d) - 2.0 * f(x) + f(x - d)) / (d * d);
  double integral =
      symmetric_singular_integral(f, x, alpha, fxx, opts.z0, y_max, opts.cells);
  integral += -2.0 * f(x) * std::pow(y_max, -alpha) / alpha;
  return -c_alpha(alpha) * integral;
}

FlResult apply_fractional_laplacian(const Grid1D& g, double alpha, FlMethod method,
                                    const QuadOpts& opts) {
  if (!(alpha > 0.0) || !(alpha <= 2.0))
    throw std::invalid_argument("apply_fractional_laplacian: alpha out of range");
  FlResult res;
  if (method == FlMethod::spectral) {
    res.boundary_warning = boundary_not_decayed(g);
    res.grid = spectral_apply(g, alpha);
  } else {
    if (alpha >= 2.0)
      throw std::invalid_argument("quadrature form requires alpha < 2");
    res.grid = quadrature_apply(g, alpha, opts);
  }
  return res;
}

}  // namespace fracl
