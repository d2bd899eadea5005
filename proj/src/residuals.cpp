#include "fracl/residuals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracl {

namespace {

constexpr double kGx[5] = {-0.906179845938663993, -0.538469310105683091, 0.0,
                           0.538469310105683091, 0.906179845938663993};
constexpr double kGw[5] = {0.236926885056189088, 0.478628670499366468,
                           0.568888888888888889, 0.478628670499366468,
                           0.236926885056189088};

/// Tabulated function with cumulative integral (Simpson with midpoints) on a
/// uniform grid; linear interpolation, clamped outside.
struct Profile {
  double lo = 0.0, hi = 1.0, dx = 1.0;
  std::vector<double> vals, anti;

  static Profile tabulate(const std::function<double(double)>& f, double lo, double hi,
                          int nodes) {
    Profile p;
    p.lo = lo;
    p.hi = hi;
    p.dx = (hi - lo) / (nodes - 1);
    p.vals.resize(nodes);
    p.anti.resize(nodes);
    for (int i = 0; i < nodes; ++i) p.vals[i] = f(lo + i * p.dx);
    p.anti[0] = 0.0;
    for (int i = 0; i + 1 < nodes; ++i) {
      double mid = f(lo + (i + 0.5) * p.dx);
      p.anti[i + 1] = p.anti[i] + p.dx / 6.0 * (p.vals[i] + 4.0 * mid + p.vals[i + 1]);
    }
    return p;
  }

  double value(double x) const {
    if (x <= lo) return vals.front();
    if (x >= hi) return vals.back();
    double s = (x - lo) / dx;
    int i = static_cast<int>(s);
    if (i >= static_cast<int>(vals.size()) - 1) return vals.back();
    double t = s - i;
    return vals[i] * (1.0 - t) + vals[i + 1] * t;
  }

  // integral of the tabulated function from lo to x (clamped)
  double integral_to(double x) const {
    if (x <= lo) return 0.0;
    if (x >= hi) return anti.back();
    double s = (x - lo) / dx;
    int i = static_cast<int>(s);
    double xi = lo + i * dx;
    double vi = vals[i];
    double vx = value(x);
    return anti[i] + 0.5 * (vi + vx) * (x - xi);
  }
};

// Sum over the constancy pieces of v of f(v) * (P(x_{i+1}) - P(x_i)) where P
// is the cumulative of a profile: equals Int f(v(x)) w(x) dx for the
// tabulated w.
double step_profile_integral(const StepFn& v, const Profile& p,
                             const std::function<double(double)>& f) {
  double total = 0.0;
  double prev_anti = 0.0;  // p.integral_to(lo) == 0
  double cur = v.left_val;
  for (std::size_t i = 0; i < v.xs.size(); ++i) {
    double a = p.integral_to(v.xs[i]);
    total += f(cur) * (a - prev_anti);
    prev_anti = a;
    cur = v.vals[i];
  }
  total += f(cur) * (p.anti.back() - prev_anti);
  return total;
}

// Int f(v(x)) psi'(x) dx = sum of f on pieces times the psi differences
// (exact: psi vanishes outside its support).
double step_flux_integral(const StepFn& v, const BumpFn& psi,
                          const std::function<double(double)>& f) {
  double total = 0.0;
  double prev_val = 0.0;  // psi(-inf) = 0
  double cur = v.left_val;
  for (std::size_t i = 0; i < v.xs.size(); ++i) {
    double val = psi(v.xs[i]);
    total += f(cur) * (val - prev_val);
    prev_val = val;
    cur = v.vals[i];
  }
  total += f(cur) * (0.0 - prev_val);  // psi(+inf) = 0
  return total;
}

// Int_{|y|>r} (v(x + sigma y) - v(x)) / |y|^{1+alpha} dy via the jump
// representation of the step function v.
double large_jump_kernel(const StepFn& v, double x, double r, double sigma,
                         double alpha) {
  double total = 0.0;
  double prev = v.left_val;
  for (std::size_t j = 0; j < v.xs.size(); ++j) {
    double jump = v.vals[j] - prev;
    prev = v.vals[j];
    double b = v.xs[j];
    if (b > x)
      total += jump * std::pow(std::max(r, (b - x) / sigma), -alpha);
    else
      total -= jump * std::pow(std::max(r, (x - b) / sigma), -alpha);
  }
  return total / alpha;
}

// subdivision of [lo, hi] at the given interior nodes with a piece cap
std::vector<double> subdivide(double lo, double hi, std::vector<double> nodes, double cap) {
  nodes.push_back(lo);
  nodes.push_back(hi);
  std::sort(nodes.begin(), nodes.end());
  std::vector<double> out;
  for (double x : nodes) {
    if (x < lo || x > hi) continue;
    if (!out.empty() && x <= out.back()) continue;
    if (!out.empty()) {
      double gap = x - out.back();
      int parts = std::max(1, static_cast<int>(std::ceil(gap / cap)));
      for (int p = 1; p < parts; ++p) out.push_back(out.back() + gap * p / parts);
    }
    out.push_back(x);
  }
  return out;
}

struct GaussPieces {
  std::vector<double> nodes;
  template <class F>
  double integrate(F&& f) const {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      double mid = 0.5 * (nodes[i] + nodes[i + 1]);
      double half = 0.5 * (nodes[i + 1] - nodes[i]);
      double s = 0.0;
      for (int k = 0; k < 5; ++k) s += kGw[k] * f(mid + half * kGx[k]);
      total += s * half;
    }
    return total;
  }
};

struct TimeGrid {
  std::vector<double> times;  // grid times t_k, k = 0..K
  Profile phi_anti;           // cumulative of phi
};

// shared assembly of the four formulation terms; `fractional_term` supplies
// the sigma-dependent nonlocal contribution for one spatial snapshot
struct Terms {
  double initial = 0.0;
  double time_deriv = 0.0;
  double flux_term = 0.0;
  double fractional = 0.0;
  double total() const { return initial + time_deriv + flux_term + fractional; }
};

void check_time_support(const BumpFn& phi, double t_final) {
  if (phi.hi > t_final + 1e-9)
    throw std::invalid_argument("residual: test-function time support exceeds the horizon");
  if (phi.lo < -1e-12)
    throw std::invalid_argument("residual: test-function support starts before 0");
}

}  // namespace

double BumpFn::operator()(double x) const {
  double z = (2.0 * x - (lo + hi)) / (hi - lo);
  if (std::abs(z) >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - z * z));
}

double BumpFn::deriv(double x) const {
  double z = (2.0 * x - (lo + hi)) / (hi - lo);
  if (std::abs(z) >= 1.0) return 0.0;
  double d = 1.0 - z * z;
  return std::exp(1.0 - 1.0 / d) * (-2.0 * z / (d * d)) * 2.0 / (hi - lo);
}

Entropy entropy_quadratic() {
  return {[](double x) { return x * x; }, [](double x) { return 2.0 * x; }, "x^2"};
}

Entropy entropy_linear(double sign) {
  return {[sign](double x) { return sign * x; }, [sign](double) { return sign; },
          sign >= 0 ? "+x" : "-x"};
}

EntropyFlux::EntropyFlux(const Entropy& eta, const FluxModel& flux, double range,
                         int nodes) {
  lo_ = -range;
  hi_ = range;
  dx_ = 2.0 * range / (nodes - 1);
  vals_.resize(nodes);
  auto f = [&](double u) { return eta.eta_prime(u) * flux.aprime(u); };
  // cumulative from the left end, then shift so psi(0) = 0
  std::vector<double> cum(nodes);
  cum[0] = 0.0;
  for (int i = 0; i + 1 < nodes; ++i) {
    double a = lo_ + i * dx_;
    double mid = f(a + 0.5 * dx_);
    cum[i + 1] = cum[i] + dx_ / 6.0 * (f(a) + 4.0 * mid + f(a + dx_));
  }
  int zero_idx = static_cast<int>(std::lround((0.0 - lo_) / dx_));
  double shift = cum[zero_idx];
  for (int i = 0; i < nodes; ++i) vals_[i] = cum[i] - shift;
}

double EntropyFlux::operator()(double u) const {
  if (u <= lo_) return vals_.front();
  if (u >= hi_) return vals_.back();
  double s = (u - lo_) / dx_;
  int i = static_cast<int>(s);
  if (i >= static_cast<int>(vals_.size()) - 1) return vals_.back();
  double t = s - i;
  return vals_[i] * (1.0 - t) + vals_[i + 1] * t;
}

namespace {

// generic assembly for step-function snapshots (frozen-in-time convention)
double residual_steps(std::span<const std::pair<double, SignedCdf>> snapshots,
                      const TestFunction& g,
                      const std::function<double(double)>& f_eta,
                      const std::function<double(double)>& f_psi,
                      const std::function<double(const StepFn&, double /*phi_slab*/,
                                                 double /*phi_point*/)>& fractional_term,
                      const ResidualOpts& opts) {
  if (snapshots.size() < 2) throw std::invalid_argument("residual: need >= 2 snapshots");
  const double h = snapshots[1].first - snapshots[0].first;
  const double t_final = snapshots.back().first;
  check_time_support(g.phi, t_final);
  Profile phi_anti = Profile::tabulate([&](double t) { return g.phi(t); }, g.phi.lo,
                                       g.phi.hi, opts.time_nodes);
  (void)h;
  Terms terms;
  StepFn v0 = snapshots.front().second.as_step();
  Profile psi_anti = Profile::tabulate([&](double x) { return g.psi(x); }, g.psi.lo,
                                       g.psi.hi, opts.profile_nodes);
  terms.initial = g.phi(0.0) * step_profile_integral(v0, psi_anti, f_eta);

  for (std::size_t k = 0; k + 1 < snapshots.size(); ++k) {
    double t0 = snapshots[k].first, t1 = snapshots[k + 1].first;
    StepFn v = snapshots[k].second.as_step();
    double dphi = g.phi(t1) - g.phi(t0);
    double phi_slab = phi_anti.integral_to(t1) - phi_anti.integral_to(t0);
    if (dphi != 0.0)
      terms.time_deriv += dphi * step_profile_integral(v, psi_anti, f_eta);
    if (phi_slab != 0.0) {
      terms.flux_term += phi_slab * step_flux_integral(v, g.psi, f_psi);
      terms.fractional += fractional_term(v, phi_slab, 0.0);
    }
  }
  return terms.total();
}

}  // namespace

double weak_residual(std::span<const std::pair<double, SignedCdf>> snapshots,
                     const TestFunction& g, double alpha, double sigma,
                     const FluxModel& flux, const ResidualOpts& opts) {
  auto identity = [](double u) { return u; };
  auto a_of = [&flux](double u) { return flux.a(u); };
  if (sigma <= 0.0) {
    auto no_frac = [](const StepFn&, double, double) { return 0.0; };
    return residual_steps(snapshots, g, identity, a_of, no_frac, opts);
  }
  double pad = opts.fractional_pad;
  Profile frac_psi = Profile::tabulate(
      [&](double x) {
        return fractional_laplacian_at([&](double y) { return g.psi(y); }, x, alpha,
                                       g.psi.lo, g.psi.hi, opts.quad);
      },
      g.psi.lo - pad, g.psi.hi + pad, opts.profile_nodes);
  double sig_a = std::pow(sigma, alpha);
  auto frac = [&](const StepFn& v, double phi_slab, double) {
    auto identity2 = [](double u) { return u; };
    return -sig_a * phi_slab * step_profile_integral(v, frac_psi, identity2);
  };
  auto identity3 = [](double u) { return u; };
  return residual_steps(snapshots, g, identity3, a_of, frac, opts);
}

double entropy_residual(std::span<const std::pair<double, SignedCdf>> snapshots,
                        const TestFunction& g, const Entropy& eta, double r,
                        double alpha, double sigma, const FluxModel& flux,
                        const ResidualOpts& opts) {
  if (!(r > 0.0)) throw std::invalid_argument("entropy_residual: r must be positive");
  EntropyFlux psi_flux(eta, flux);
  auto f_eta = [&](double u) { return eta.eta(u); };
  auto f_psi = [&](double u) { return psi_flux(u); };
  if (sigma <= 0.0) {
    auto no_frac = [](const StepFn&, double, double) { return 0.0; };
    return residual_steps(snapshots, g, f_eta, f_psi, no_frac, opts);
  }
  const double ca = c_alpha(alpha);
  const double cap = opts.piece_cap > 0.0 ? opts.piece_cap : (g.psi.hi - g.psi.lo) / 256.0;
  // small-jump profile: Int_{|y|<=r} (g(x+sy) - g(x) - sy g'(x)) / |y|^{1+a} dy
  Profile small_jump = Profile::tabulate(
      [&](double x) {
        double d = 1e-4;
        double fxx = (g.psi(x + d) - 2.0 * g.psi(x) + g.psi(x - d)) / (d * d);
        return std::pow(sigma, alpha) *
               symmetric_singular_integral([&](double y) { return g.psi(y); }, x, alpha,
                                           fxx, opts.quad.z0, sigma * r, opts.quad.cells);
      },
      g.psi.lo - sigma * r - 1.0, g.psi.hi + sigma * r + 1.0, opts.profile_nodes);

  auto frac = [&](const StepFn& v, double phi_slab, double) {
    // eta(v) against the small-jump kernel of g
    double small = step_profile_integral(v, small_jump, f_eta);
    // eta'(v(x)) (v(x + sigma y) - v(x)) against g for |y| > r
    std::vector<double> cuts;
    for (double b : v.xs) {
      cuts.push_back(b);
      cuts.push_back(b - sigma * r);
      cuts.push_back(b + sigma * r);
    }
    GaussPieces pieces{subdivide(g.psi.lo, g.psi.hi, std::move(cuts), cap)};
    StepFn vc = v;  // capture by value for the lambda below
    double large = pieces.integrate([&](double x) {
      return eta.eta_prime(vc(x)) * large_jump_kernel(vc, x, r, sigma, alpha) * g.psi(x);
    });
    return ca * phi_slab * (small + large);
  };
  return residual_steps(snapshots, g, f_eta, f_psi, frac, opts);
}

namespace {

// midpoint-in-time assembly for continuum profiles
double residual_profile(const std::function<PwLinear(double)>& v, double dt,
                        double t_final, const TestFunction& g,
                        const std::function<double(double)>& f_eta,
                        const std::function<double(double)>& f_psi,
                        const Profile* frac_psi, double sig_a,
                        const ResidualOpts& opts) {
  if (!(dt > 0.0)) throw std::invalid_argument("residual_profile: dt must be positive");
  check_time_support(g.phi, t_final);
  const double cap = opts.piece_cap > 0.0 ? opts.piece_cap : (g.psi.hi - g.psi.lo) / 256.0;
  long long steps = std::llround(t_final / dt);

  auto spatial = [&](const PwLinear& prof, double lo, double hi, auto&& integrand) {
    std::vector<double> cuts(prof.xs.begin(), prof.xs.end());
    GaussPieces pieces{subdivide(lo, hi, std::move(cuts), cap)};
    return pieces.integrate(integrand);
  };

  PwLinear v0 = v(0.0);
  double total = g.phi(0.0) * spatial(v0, g.psi.lo, g.psi.hi, [&](double x) {
    return f_eta(v0(x)) * g.psi(x);
  });

  for (long long k = 0; k < steps; ++k) {
    double tm = (k + 0.5) * dt;
    if (g.phi(tm) == 0.0 && g.phi.deriv(tm) == 0.0) continue;
    PwLinear prof = v(tm);
    double s_eta = spatial(prof, g.psi.lo, g.psi.hi,
                           [&](double x) { return f_eta(prof(x)) * g.psi(x); });
    double s_flux = spatial(prof, g.psi.lo, g.psi.hi,
                            [&](double x) { return f_psi(prof(x)) * g.psi.deriv(x); });
    total += dt * (g.phi.deriv(tm) * s_eta + g.phi(tm) * s_flux);
    if (frac_psi) {
      double s_frac = spatial(prof, frac_psi->lo, frac_psi->hi, [&](double x) {
        return prof(x) * frac_psi->value(x);
      });
      total += dt * g.phi(tm) * (-sig_a) * s_frac;
    }
  }
  return total;
}

}  // namespace

double weak_residual_profile(const std::function<PwLinear(double)>& v, double dt,
                             double t_final, const TestFunction& g, double alpha,
                             double sigma, const FluxModel& flux,
                             const ResidualOpts& opts) {
  auto identity = [](double u) { return u; };
  auto a_of = [&flux](double u) { return flux.a(u); };
  if (sigma <= 0.0)
    return residual_profile(v, dt, t_final, g, identity, a_of, nullptr, 0.0, opts);
  Profile frac_psi = Profile::tabulate(
      [&](double x) {
        return fractional_laplacian_at([&](double y) { return g.psi(y); }, x, alpha,
                                       g.psi.lo, g.psi.hi, opts.quad);
      },
      g.psi.lo - opts.fractional_pad, g.psi.hi + opts.fractional_pad, opts.profile_nodes);
  return residual_profile(v, dt, t_final, g, identity, a_of, &frac_psi,
                          std::pow(sigma, alpha), opts);
}

double entropy_residual_profile(const std::function<PwLinear(double)>& v, double dt,
                                double t_final, const TestFunction& g,
                                const Entropy& eta, double alpha,
                                const FluxModel& flux, const ResidualOpts& opts) {
  (void)alpha;
  EntropyFlux psi_flux(eta, flux);
  auto f_eta = [&](double u) { return eta.eta(u); };
  auto f_psi = [&](double u) { return psi_flux(u); };
  return residual_profile(v, dt, t_final, g, f_eta, f_psi, nullptr, 0.0, opts);
}

}  // namespace fracl
