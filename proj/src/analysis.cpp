#include "fracl/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "fracl/weighted_l1.hpp"

namespace fracl {

double ErrorReport::error_at(double t) const {
  for (const auto& [tk, e] : per_time)
    if (std::abs(tk - t) <= 1e-9 * std::max(1.0, std::abs(t))) return e;
  throw std::invalid_argument("ErrorReport::error_at: t is not a recorded grid time");
}

double weighted_l1_error(const SignedCdf& cdf, const PwLinear& reference) {
  return weighted_l1_distance(cdf.as_step(), reference);
}

ErrorAccumulator::ErrorAccumulator(std::function<PwLinear(double)> reference_profile,
                                   double h, double t_final, ErrorMeta meta)
    : ref_(std::move(reference_profile)), h_(h), t_final_(t_final) {
  if (!(h > 0.0) || t_final < h)
    throw std::invalid_argument("ErrorAccumulator: need h > 0 and T >= h");
  report_.meta = meta;
}

void ErrorAccumulator::add(double t, const SignedCdf& cdf) {
  if (t > t_final_ - h_ + 1e-9) return;  // left-endpoint rule: keep k = 0..K-1
  double e = weighted_l1_error(cdf, ref_(t));
  report_.per_time.emplace_back(t, e);
  report_.integrated += h_ * e;
}

ErrorReport ErrorAccumulator::finalize() const { return report_; }

ErrorReport time_integrated_error(
    std::span<const std::pair<double, SignedCdf>> snapshots,
    const std::function<PwLinear(double)>& reference_profile, double t_final,
    const ErrorMeta& meta) {
  if (snapshots.size() < 2)
    throw std::invalid_argument("time_integrated_error: need at least two snapshots");
  double h = snapshots[1].first - snapshots[0].first;
  for (std::size_t k = 0; k < snapshots.size(); ++k) {
    if (std::abs(snapshots[k].first - static_cast<double>(k) * h) > 1e-9)
      throw std::invalid_argument("time_integrated_error: snapshots off the {k h} grid");
  }
  ErrorAccumulator acc(reference_profile, h, t_final, meta);
  for (const auto& [t, cdf] : snapshots) acc.add(t, cdf);
  return acc.finalize();
}

FitResult convergence_slope(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3)
    throw std::invalid_argument("convergence_slope: need at least 3 points");
  std::vector<double> xs, ys;
  for (const auto& [scale, err] : points) {
    if (!(scale > 0.0) || !(err > 0.0))
      throw std::invalid_argument("convergence_slope: scales and errors must be positive");
    xs.push_back(std::log(scale));
    ys.push_back(std::log(err));
  }
  double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return fit;
}

namespace {

RegimeCheck make_check(std::string name, double lhs, double rhs) {
  return {std::move(name), lhs, rhs, lhs <= rhs};
}

bool all_pass(const std::vector<RegimeCheck>& cs) {
  for (const auto& c : cs)
    if (!c.pass) return false;
  return true;
}

}  // namespace

RegimeReport validate_theorem_hypotheses(double n, double h, double eps, double sigma,
                                         double alpha, double lambda,
                                         const FluxModel& flux) {
  if (!(n > 0.0) || !(h > 0.0) || !(eps > 0.0) || sigma < 0.0 || !(lambda > 0.0) ||
      !(alpha > 0.0) || !(alpha <= 2.0))
    throw std::invalid_argument("validate_theorem_hypotheses: nonpositive parameter");
  RegimeReport rep;
  rep.lambda = lambda;
  const double sup = flux.sup_abs_aprime();
  const double drift_scale = 4.0 * sup * h;

  rep.thm1_applicable = alpha <= 1.0;
  if (rep.thm1_applicable) {
    rep.thm1_checks.push_back(make_check("N^-lambda <= 4 sup|A'| h", std::pow(n, -lambda),
                                         drift_scale));
    rep.thm1_checks.push_back(make_check("4 sup|A'| h <= eps", drift_scale, eps));
    rep.thm1_checks.push_back(make_check("N^-1/alpha <= N^-1/lambda eps",
                                         std::pow(n, -1.0 / alpha),
                                         std::pow(n, -1.0 / lambda) * eps));
    if (alpha == 1.0)
      rep.thm1_checks.push_back(make_check("h <= eps N^-1/lambda (alpha = 1)", h,
                                           eps * std::pow(n, -1.0 / lambda)));
    rep.thm1_pass = all_pass(rep.thm1_checks);
  }

  rep.thm2_checks.push_back(make_check("N^-lambda <= 4 sup|A'| h", std::pow(n, -lambda),
                                       drift_scale));
  rep.thm2_checks.push_back(make_check("4 sup|A'| h <= eps", drift_scale, eps));
  if (alpha > 1.0)
    rep.thm2_checks.push_back(make_check("sigma <= eps^(1-1/alpha) N^-1/lambda (alpha > 1)",
                                         sigma,
                                         std::pow(eps, 1.0 - 1.0 / alpha) *
                                             std::pow(n, -1.0 / lambda)));
  rep.thm2_pass = all_pass(rep.thm2_checks);

  rep.thm3_applicable = alpha > 1.0;
  rep.thm3_pass = rep.thm3_applicable;  // no inequality constraints

  if (rep.thm1_applicable && rep.thm1_pass)
    rep.theorem = Theorem::thm1;
  else if (rep.thm2_pass)
    rep.theorem = Theorem::thm2;
  else if (rep.thm3_applicable)
    rep.theorem = Theorem::thm3;
  else
    rep.theorem = Theorem::none;
  return rep;
}

const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::thm1: return "thm1";
    case Theorem::thm2: return "thm2";
    case Theorem::thm3: return "thm3";
    default: return "none";
  }
}

}  // namespace fracl
