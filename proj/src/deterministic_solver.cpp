#include "fracl/deterministic_solver.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fracl {

namespace {

// critical points of A (roots of A') inside [lo, hi], located by bisection on
// a sign-change subdivision
void critical_points(const FluxModel& flux, double lo, double hi, std::vector<double>& out) {
  const int n = 32;
  double prev_x = lo, prev_v = flux.aprime(lo);
  for (int i = 1; i <= n; ++i) {
    double x = lo + (hi - lo) * i / n;
    double v = flux.aprime(x);
    if (prev_v == 0.0) out.push_back(prev_x);
    if (prev_v * v < 0.0) {
      double a = prev_x, b = x, fa = prev_v;
      for (int it = 0; it < 60; ++it) {
        double mform = 0.5 * (a + b), fm = flux.aprime(mform);
        if (fa * fm <= 0.0)
          b = mform;
        else
          a = mform, fa = fm;
      }
      out.push_back(0.5 * (a + b));
    }
    prev_x = x;
    prev_v = v;
  }
  if (prev_v == 0.0) out.push_back(prev_x);
}

double total_variation_grid(const std::vector<double>& v) {
  double tv = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) tv += std::abs(v[i] - v[i - 1]);
  return tv;
}

struct FftWorkspace {
  int m;
  std::vector<double> real;
  std::vector<fftw_complex> freq;
  fftw_plan fwd, bwd;

  explicit FftWorkspace(int m_) : m(m_), real(m_), freq(m_ / 2 + 1) {
    fwd = fftw_plan_dft_r2c_1d(m, real.data(), freq.data(), FFTW_ESTIMATE);
    bwd = fftw_plan_dft_c2r_1d(m, freq.data(), real.data(), FFTW_ESTIMATE);
  }
  ~FftWorkspace() {
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }
  FftWorkspace(const FftWorkspace&) = delete;
  FftWorkspace& operator=(const FftWorkspace&) = delete;
};

}  // namespace

double godunov_flux(const FluxModel& flux, double vl, double vr) {
  if (vl == vr) return flux.a(vl);
  double lo = std::min(vl, vr), hi = std::max(vl, vr);
  std::vector<double> cand = {vl, vr};
  critical_points(flux, lo, hi, cand);
  double fmin = flux.a(cand[0]), fmax = fmin;
  for (double c : cand) {
    double v = flux.a(c);
    fmin = std::min(fmin, v);
    fmax = std::max(fmax, v);
  }
  return vl <= vr ? fmin : fmax;
}

double max_stable_dt(const Grid1D& v0, double alpha, double sigma, const FluxModel& flux) {
  double lo = *std::min_element(v0.values.begin(), v0.values.end());
  double hi = *std::max_element(v0.values.begin(), v0.values.end());
  // sup of |A'| over the invariant value range (monotone scheme keeps values
  // inside [lo, hi])
  double sup = std::max(std::abs(flux.aprime(lo)), std::abs(flux.aprime(hi)));
  std::vector<double> crit;
  critical_points(flux, lo, hi, crit);
  for (double c : crit) sup = std::max(sup, std::abs(flux.aprime(c)));
  const int n = 256;
  for (int i = 0; i <= n; ++i)
    sup = std::max(sup, std::abs(flux.aprime(lo + (hi - lo) * i / n)));
  double dt = sup > 0.0 ? v0.dx() / sup : std::numeric_limits<double>::infinity();
  if (sigma > 0.0) {
    double xi_max = std::numbers::pi / v0.dx();
    dt = std::min(dt, 1.0 / (std::pow(sigma, alpha) * std::pow(xi_max, alpha)));
  }
  return dt;
}

DetSolution deterministic_solve(const Grid1D& v0, double alpha, double sigma,
                                const FluxModel& flux, double t_final, double dt,
                                const std::vector<double>& snapshot_times) {
  if (!(dt > 0.0) || t_final < 0.0)
    throw std::invalid_argument("deterministic_solve: bad time parameters");
  if (dt > max_stable_dt(v0, alpha, sigma, flux) * (1.0 + 1e-12))
    throw std::invalid_argument("deterministic_solve: CFL violation");
  const int m = v0.m;
  const double dx = v0.dx();
  const long long steps = std::llround(t_final / dt);
  if (std::abs(steps * dt - t_final) > 1e-9 * std::max(1.0, t_final))
    throw std::invalid_argument("deterministic_solve: t_final must be a multiple of dt");

  std::vector<long long> snap_steps;
  for (double ts : snapshot_times) {
    long long s = std::llround(ts / dt);
    if (s < 0 || s > steps || std::abs(s * dt - ts) > 1e-9 * std::max(1.0, ts))
      throw std::invalid_argument("deterministic_solve: snapshot time off the dt grid");
    snap_steps.push_back(s);
  }
  std::sort(snap_steps.begin(), snap_steps.end());
  snap_steps.erase(std::unique(snap_steps.begin(), snap_steps.end()), snap_steps.end());

  DetSolution sol;
  const double sig_a = sigma > 0.0 ? std::pow(sigma, alpha) : 0.0;
  const double length = v0.x_max - v0.x_min;
  FftWorkspace fft(m);
  std::vector<double> mult(m / 2 + 1);
  for (int k = 0; k <= m / 2; ++k) {
    double xi = 2.0 * std::numbers::pi * k / length;
    mult[k] = (1.0 - dt * sig_a * std::pow(xi, alpha)) / m;
  }

  std::vector<double> v = v0.values;
  std::vector<double> fluxes(m + 1);

  auto check_boundary = [&](const std::vector<double>& vals) {
    double peak = 0.0;
    for (double x : vals) peak = std::max(peak, std::abs(x));
    if (peak == 0.0) return;
    int guard = std::max(1, m / 10);
    for (int i = 0; i < guard; ++i) {
      if (std::abs(vals[i]) > 1e-6 * peak || std::abs(vals[m - 1 - i]) > 1e-6 * peak) {
        sol.boundary_warning = true;
        return;
      }
    }
  };

  std::size_t next_snap = 0;
  auto emit = [&](long long s) {
    if (next_snap < snap_steps.size() && snap_steps[next_snap] == s) {
      Grid1D g = v0;
      g.values = v;
      sol.snapshots.push_back({s * dt, std::move(g)});
      ++next_snap;
    }
  };

  check_boundary(v);
  emit(0);
  for (long long s = 0; s < steps; ++s) {
    // advection substep (Godunov), constant extrapolation at the boundary
    double tv_before = total_variation_grid(v);
    fluxes[0] = flux.a(v.front());
    fluxes[m] = flux.a(v.back());
    for (int i = 0; i + 1 < m; ++i) fluxes[i + 1] = godunov_flux(flux, v[i], v[i + 1]);
    for (int i = 0; i < m; ++i) v[i] -= dt / dx * (fluxes[i + 1] - fluxes[i]);
    double tv_after = total_variation_grid(v);
    if (tv_after > tv_before + 1e-10 * (1.0 + tv_before))
      throw std::logic_error("deterministic_solve: advection substep increased TV");

    // fractional diffusion substep, exact in Fourier space
    if (sig_a > 0.0) {
      std::copy(v.begin(), v.end(), fft.real.begin());
      fftw_execute(fft.fwd);
      for (int k = 0; k <= m / 2; ++k) {
        fft.freq[k][0] *= mult[k];
        fft.freq[k][1] *= mult[k];
      }
      fftw_execute(fft.bwd);
      std::copy(fft.real.begin(), fft.real.end(), v.begin());
    }
    check_boundary(v);
    emit(s + 1);
  }
  return sol;
}

PwLinear reference_cdf_on_grid(const Grid1D& g) {
  std::vector<double> xs(g.m), vals(g.m);
  for (int i = 0; i < g.m; ++i) {
    xs[i] = g.center(i);
    vals[i] = g.values[i];
  }
  return PwLinear::interpolant(std::move(xs), std::move(vals));
}

}  // namespace fracl
