#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fracl/flux.hpp"
#include "fracl/fractional_laplacian.hpp"
#include "fracl/particle_system.hpp"
#include "fracl/piecewise_linear.hpp"

namespace fracl {

/// C-infinity bump exp(1 - 1/(1 - z^2)) on (lo, hi) (peak 1 at the midpoint,
/// identically 0 outside).
struct BumpFn {
  double lo = 0.0, hi = 1.0;
  double operator()(double x) const;
  double deriv(double x) const;
};

/// Separable test function g(t,x) = phi(t) psi(x); smooth and compactly
/// supported in both variables.
struct TestFunction {
  BumpFn phi;  // time factor
  BumpFn psi;  // space factor
};

struct Entropy {
  std::function<double(double)> eta;
  std::function<double(double)> eta_prime;
  std::string name;
};

Entropy entropy_quadratic();          // eta(x) = x^2
Entropy entropy_linear(double sign);  // eta(x) = sign * x

/// Entropy flux psi with psi' = eta' A' and psi(0) = 0, built by numeric
/// antidifferentiation (composite Simpson); accurate to ~1e-8 on [-1,1].
class EntropyFlux {
 public:
  EntropyFlux(const Entropy& eta, const FluxModel& flux, double range = 1.5,
              int nodes = 30001);
  double operator()(double u) const;

 private:
  double lo_, hi_, dx_;
  std::vector<double> vals_;
};

struct ResidualOpts {
  int profile_nodes = 4001;     // resolution of tabulated x-profiles
  int time_nodes = 4001;        // resolution of the time antiderivative
  double fractional_pad = 30.0; // tabulation window of (-Lap)^{a/2} psi beyond supp psi
  double piece_cap = 0.0;       // max Gauss piece (0: span/256)
  QuadOpts quad;                // controls of the singular quadratures
};

/// Left-hand side of the weak formulation
///   Int v0 g0 + Int Int v dg/dt - sigma^alpha Int Int v (-Lap)^{a/2} g
///   + Int Int A(v) dg/dx
/// with v the signed empirical CDF frozen at the grid times.  Zero for the
/// weak solution, so the magnitude is a residual.
double weak_residual(std::span<const std::pair<double, SignedCdf>> snapshots,
                     const TestFunction& g, double alpha, double sigma,
                     const FluxModel& flux, const ResidualOpts& opts = {});

/// Same functional for a continuum profile t -> v(t, .), sampled at midpoints
/// of the dt grid.
double weak_residual_profile(const std::function<PwLinear(double)>& v, double dt,
                             double t_final, const TestFunction& g, double alpha,
                             double sigma, const FluxModel& flux,
                             const ResidualOpts& opts = {});

/// Left-hand side of the fractional entropy inequality (the two y-integrals
/// split at |y| = r); >= 0 for entropy solutions, so negative values are
/// violations.  With sigma = 0 both y-terms vanish and this is the classical
/// Kruzhkov form.
double entropy_residual(std::span<const std::pair<double, SignedCdf>> snapshots,
                        const TestFunction& g, const Entropy& eta, double r,
                        double alpha, double sigma, const FluxModel& flux,
                        const ResidualOpts& opts = {});

/// Continuum-profile variant (inviscid form only: requires sigma = 0).
double entropy_residual_profile(const std::function<PwLinear(double)>& v, double dt,
                                double t_final, const TestFunction& g,
                                const Entropy& eta, double alpha,
                                const FluxModel& flux,
                                const ResidualOpts& opts = {});

}  // namespace fracl
