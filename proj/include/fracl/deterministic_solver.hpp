#pragma once

#include <vector>

#include "fracl/flux.hpp"
#include "fracl/fractional_laplacian.hpp"
#include "fracl/piecewise_linear.hpp"

namespace fracl {

struct DetSnapshot {
  double t;
  Grid1D grid;
};

struct DetSolution {
  std::vector<DetSnapshot> snapshots;
  bool boundary_warning = false;  // support reached within 10% of the boundary
};

/// Explicit splitting solver for v_t + sigma^alpha (-Laplace)^{alpha/2} v +
/// (A(v))_x = 0 on a periodic grid: per step, (1) Godunov finite-volume
/// update of the advection, (2) explicit fractional diffusion
/// v <- v - dt sigma^alpha (-Laplace)^{alpha/2} v through the spectral
/// operator.  Requires compactly supported v0 inside the domain.  Rejects the
/// step size unless dt sup|A'| <= dx (over the invariant value range) and
/// dt sigma^alpha |xi_max|^alpha <= 1.  The advection substep is asserted to
/// be TVD.  Snapshots are emitted at the requested times, which must lie on
/// the dt grid.
DetSolution deterministic_solve(const Grid1D& v0, double alpha, double sigma,
                                const FluxModel& flux, double t_final, double dt,
                                const std::vector<double>& snapshot_times);

/// Largest stable dt for the given setup (both CFL constraints).
double max_stable_dt(const Grid1D& v0, double alpha, double sigma, const FluxModel& flux);

/// Godunov numerical flux: min of A over [vl, vr] when vl <= vr, max over
/// [vr, vl] otherwise (interior critical points of A located by bisection).
double godunov_flux(const FluxModel& flux, double vl, double vr);

/// Piecewise-linear interpolant of the cell values at the cell centers with
/// constant extrapolation outside the grid.
PwLinear reference_cdf_on_grid(const Grid1D& g);

}  // namespace fracl
