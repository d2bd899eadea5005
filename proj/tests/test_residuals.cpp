#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "fracl/exact_burgers.hpp"
#include "fracl/residuals.hpp"
#include "fracl/rng.hpp"

using namespace fracl;

namespace {

std::vector<std::pair<double, SignedCdf>> constant_path(const SignedCdf& cdf, double h,
                                                        int steps) {
  std::vector<std::pair<double, SignedCdf>> snaps;
  for (int k = 0; k <= steps; ++k) snaps.emplace_back(k * h, cdf);
  return snaps;
}

SignedCdf small_cdf() {
  SignedCdf cdf;
  cdf.breakpoints = {-0.5, 0.2, 0.8};
  cdf.cumulative = {0.25, -0.25, 0.0};
  return cdf;
}

TestFunction bump(double t0, double t1, double x0, double x1) {
  return {BumpFn{t0, t1}, BumpFn{x0, x1}};
}

}  // namespace

TEST_CASE("bump test functions are smooth, compact, with exact derivatives") {
  BumpFn b{-1.0, 2.0};
  CHECK(b(-1.0) == 0.0);
  CHECK(b(2.0) == 0.0);
  CHECK(b(0.5) == doctest::Approx(1.0));
  for (double x : {-0.7, 0.1, 0.5, 1.2, 1.9}) {
    double fd = (b(x + 1e-6) - b(x - 1e-6)) / 2e-6;
    CHECK(b.deriv(x) == doctest::Approx(fd).epsilon(1e-5));
  }
}

TEST_CASE("entropy flux for Burgers and eta = x^2 is 2u^3/3") {
  EntropyFlux psi(entropy_quadratic(), FluxModel::burgers());
  for (double u = -1.0; u <= 1.0; u += 0.01)
    CHECK(psi(u) == doctest::Approx(2.0 * u * u * u / 3.0).epsilon(1e-8));
}

TEST_CASE("weak residual of the empty path is zero") {
  SignedCdf empty;
  auto snaps = constant_path(empty, 0.25, 4);
  auto g = bump(0.1, 0.9, -1.0, 1.0);
  CHECK(weak_residual(snaps, g, 1.5, 0.5, FluxModel::burgers()) ==
        doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("weak residual of the exact inviscid solution is small") {
  auto profile = [](double t) { return exact_inviscid_profile(t); };
  auto g = bump(0.3, 1.8, -4.0, 0.5);
  double res =
      weak_residual_profile(profile, 1e-3, 2.0, g, 2.0, 0.0, FluxModel::burgers());
  CHECK(std::abs(res) <= 1e-3);
}

TEST_CASE("entropy residual with linear eta collapses to the weak residual") {
  auto snaps = constant_path(small_cdf(), 0.25, 4);
  // also vary the path in time so the dphi term is nontrivial
  snaps[2].second.cumulative = {0.25, -0.125, 0.0};
  snaps[3].second.cumulative = {0.125, -0.25, 0.0};
  auto g = bump(0.1, 0.9, -1.5, 1.5);
  const double alpha = 1.3, sigma = 0.8, r = 0.7;
  ResidualOpts opts;
  opts.profile_nodes = 20001;
  opts.fractional_pad = 3.0;  // the path is exactly zero outside [-4.5, 4.5]
  opts.quad.cells = 8192;
  double weak = weak_residual(snaps, g, alpha, sigma, FluxModel::burgers(), opts);
  double ent_p = entropy_residual(snaps, g, entropy_linear(+1), r, alpha, sigma,
                                  FluxModel::burgers(), opts);
  double ent_m = entropy_residual(snaps, g, entropy_linear(-1), r, alpha, sigma,
                                  FluxModel::burgers(), opts);
  CHECK(std::abs(weak - ent_p) <= 1e-6);
  CHECK(std::abs(weak + ent_m) <= 1e-6);
}

TEST_CASE("entropy residual of the exact solution is nonnegative (quadratic eta)") {
  auto profile = [](double t) { return exact_inviscid_profile(t); };
  auto g = bump(0.2, 2.0, -3.5, -0.5);  // bump around the rarefaction
  double res = entropy_residual_profile(profile, 1e-3, 2.2, g, entropy_quadratic(), 2.0,
                                        FluxModel::burgers());
  CHECK(res >= -1e-3);
}

TEST_CASE("stationary expansion shock is detected as an entropy violation") {
  // sign-reversed box datum held fixed in time; the jump 0 -> +1 at x = 2 is
  // an expansion shock
  PwLinear shock = PwLinear::step({-3, -2, 2, 3}, {-1, 0, 1, 0}, 0.0);
  auto profile = [&](double) { return shock; };
  auto g = bump(0.2, 0.8, 1.3, 2.7);
  double res = entropy_residual_profile(profile, 1e-3, 1.0, g, entropy_quadratic(), 2.0,
                                        FluxModel::burgers());
  CHECK(res < -0.01);
}

TEST_CASE("entropy residual is nondecreasing in the split radius r") {
  RngStream rng(4041, 0);
  auto g = bump(0.1, 0.9, -2.0, 2.0);
  for (int rep = 0; rep < 5; ++rep) {
    SignedCdf cdf;
    double x = -1.5;
    double acc = 0.0;
    for (int i = 0; i < 6; ++i) {
      x += rng.next_uniform(0.05, 0.6);
      acc = i == 5 ? 0.0 : rng.next_uniform(-0.5, 0.5);
      cdf.breakpoints.push_back(x);
      cdf.cumulative.push_back(acc);
    }
    auto snaps = constant_path(cdf, 0.25, 4);
    const double alpha = 1.4, sigma = 0.6;
    double r1 = entropy_residual(snaps, g, entropy_quadratic(), 0.5, alpha, sigma,
                                 FluxModel::burgers());
    double r2 = entropy_residual(snaps, g, entropy_quadratic(), 1.0, alpha, sigma,
                                 FluxModel::burgers());
    CHECK(r2 >= r1 - 1e-8);
  }
}

TEST_CASE("residual input validation") {
  auto snaps = constant_path(small_cdf(), 0.25, 4);
  auto too_long = bump(0.5, 2.0, -1.0, 1.0);  // phi support beyond the horizon
  CHECK_THROWS(weak_residual(snaps, too_long, 1.5, 0.0, FluxModel::burgers()));
  auto g = bump(0.1, 0.9, -1.0, 1.0);
  CHECK_THROWS(entropy_residual(snaps, g, entropy_quadratic(), 0.0, 1.5, 0.5,
                                FluxModel::burgers()));
}
