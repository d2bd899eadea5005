#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fracl/flux.hpp"
#include "fracl/particle_system.hpp"
#include "fracl/piecewise_linear.hpp"

namespace fracl {

struct ErrorMeta {
  int n = 0;
  double h = 0.0, eps = 0.0, sigma = 0.0, alpha = 0.0;
  std::uint64_t seed = 0;
};

/// Weighted-L1 errors per grid time plus the left-endpoint Riemann sum of the
/// time integral: per_time holds (k h, error) for k = 0..K-1 and
/// integrated = h * sum(per_time).
struct ErrorReport {
  std::vector<std::pair<double, double>> per_time;
  double integrated = 0.0;
  ErrorMeta meta;

  double error_at(double t) const;  // exact grid-time lookup
};

/// ||F - G||_{L1(dx/(1+x^2))} for the particle CDF against a reference
/// profile.
double weighted_l1_error(const SignedCdf& cdf, const PwLinear& reference);

/// ErrorReport over stored snapshots at the grid times {k h, k = 0..K};
/// reference_profile(t) supplies the comparison profile.  Rejects snapshot
/// times that do not line up with the grid of the first two entries.
ErrorReport time_integrated_error(
    std::span<const std::pair<double, SignedCdf>> snapshots,
    const std::function<PwLinear(double)>& reference_profile, double t_final,
    const ErrorMeta& meta);

/// Streaming form of time_integrated_error for use inside a simulation
/// callback (avoids retaining every snapshot).
class ErrorAccumulator {
 public:
  ErrorAccumulator(std::function<PwLinear(double)> reference_profile, double h,
                   double t_final, ErrorMeta meta);
  void add(double t, const SignedCdf& cdf);
  ErrorReport finalize() const;

 private:
  std::function<PwLinear(double)> ref_;
  double h_, t_final_;
  ErrorReport report_;
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares on (log scale, log error); scales and errors must
/// be positive and at least 3 points are required.
FitResult convergence_slope(std::span<const std::pair<double, double>> points);

enum class Theorem { thm1, thm2, thm3, none };

struct RegimeCheck {
  std::string name;
  double lhs, rhs;
  bool pass;
};

/// Hypothesis sets of the three convergence regimes evaluated at one
/// parameter point with the user-supplied lambda (the statements quantify
/// over "some lambda > 0", so passing at any lambda suffices).
struct RegimeReport {
  double lambda = 0.0;
  std::vector<RegimeCheck> thm1_checks;  // applicable when alpha <= 1
  std::vector<RegimeCheck> thm2_checks;  // vanishing-viscosity regime
  std::vector<RegimeCheck> thm3_checks;  // applicable when alpha > 1 (empty set)
  bool thm1_applicable = false, thm3_applicable = false;
  bool thm1_pass = false, thm2_pass = false, thm3_pass = false;
  Theorem theorem = Theorem::none;  // strongest satisfied regime
};

RegimeReport validate_theorem_hypotheses(double n, double h, double eps, double sigma,
                                         double alpha, double lambda,
                                         const FluxModel& flux);

const char* theorem_name(Theorem t);

}  // namespace fracl
