#pragma once

#include <functional>
#include <vector>

namespace fracl {

/// Uniform cell-centered grid on [x_min, x_max].
struct Grid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  int m = 0;
  std::vector<double> values;

  double dx() const { return (x_max - x_min) / m; }
  double center(int i) const { return x_min + (i + 0.5) * dx(); }

  static Grid1D from_function(double x_min, double x_max, int m,
                              const std::function<double(double)>& f);
};

/// Normalization constant of the integral representation, pinned so that
///   (-Laplace)^{alpha/2} u (x) = -c_alpha Int (u(x+y) - u(x) - 1_{|y|<=r} u'(x) y) / |y|^{1+alpha} dy
/// has Fourier symbol exactly |xi|^alpha:
///   c_alpha = 2^{alpha-1} alpha Gamma((1+alpha)/2) / (sqrt(pi) Gamma(1 - alpha/2)).
double c_alpha(double alpha);

enum class FlMethod { spectral, quadrature };

struct QuadOpts {
  double r = 1.0;      // compensator split of the integral form (the value is r-independent)
  double y_max = 0.0;  // outer truncation; 0 = derive from the support
  double z0 = 1e-3;    // inner cutoff handled by the second-order Taylor term
  int cells = 2048;    // log-spaced composite-midpoint cells on [z0, y_max]
};

struct FlResult {
  Grid1D grid;
  bool boundary_warning = false;  // spectral input not decayed at the boundary
};

/// (-Laplace)^{alpha/2} of a grid function.  Spectral: inverse transform of
/// |xi_k|^alpha * transform(values), treating the values as one period (the
/// data must be compactly supported inside the domain; a warning flag is set
/// otherwise).  Quadrature: composite-midpoint evaluation of the integral
/// representation (values taken as 0 outside the grid), symmetrized so the
/// compensator drops out and the result is r-independent.
FlResult apply_fractional_laplacian(const Grid1D& g, double alpha, FlMethod method,
                                    const QuadOpts& opts = {});

/// Int_0^{y_max} (f(x+z) + f(x-z) - 2 f(x)) / z^{1+alpha} dz with the
/// singular inner part [0, z0] replaced by its Taylor value fxx z0^{2-alpha}/(2-alpha).
double symmetric_singular_integral(const std::function<double(double)>& f, double x,
                                   double alpha, double fxx, double z0, double y_max,
                                   int cells);

/// (-Laplace)^{alpha/2} f (x) for a smooth f vanishing outside
/// [support_lo, support_hi]; alpha in (0,2).
double fractional_laplacian_at(const std::function<double(double)>& f, double x,
                               double alpha, double support_lo, double support_hi,
                               const QuadOpts& opts = {});

}  // namespace fracl
