#include "fracl/flux.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracl {

namespace {

double eval_poly(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
  return v;
}

std::vector<double> derive_poly(const std::vector<double>& c) {
  std::vector<double> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
  if (d.empty()) d.push_back(0.0);
  return d;
}

// sup over [-1,1] of |p| by dense sampling; the 1e5-point grid contains the
// 1e4-point certification grid and both endpoints, so endpoint-attained
// maxima (the Burgers family) come out exact.
double sup_abs_on_unit(const std::vector<double>& p) {
  const int n = 100000;
  double best = 0.0;
  for (int i = 0; i <= n; ++i) {
    double x = -1.0 + 2.0 * i / n;
    best = std::max(best, std::abs(eval_poly(p, x)));
  }
  return best;
}

}  // namespace

FluxModel::FluxModel(Kind kind, std::vector<double> coeffs)
    : kind_(kind), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  sup_abs_aprime_ = sup_abs_on_unit(derive_poly(coeffs_));
}

FluxModel FluxModel::burgers() { return FluxModel(Kind::burgers, {0.0, 0.0, 0.5}); }

FluxModel FluxModel::polynomial(std::vector<double> coeffs) {
  return FluxModel(Kind::polynomial, std::move(coeffs));
}

double FluxModel::a(double x) const { return eval_poly(coeffs_, x); }

double FluxModel::aprime(double x) const { return eval_poly(derive_poly(coeffs_), x); }

FluxModel FluxModel::rescaled(double offset, double tv) const {
  if (!(tv > 0.0)) throw std::invalid_argument("FluxModel::rescaled: tv must be positive");
  // A~(x) = A(offset + tv x) / tv, expanded exactly via the binomial theorem.
  std::vector<double> out(coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    // coeffs_[k] * (offset + tv x)^k
    double binom = 1.0;  // C(k, j)
    for (std::size_t j = 0; j <= k; ++j) {
      out[j] += coeffs_[k] * binom * std::pow(offset, static_cast<double>(k - j)) *
                std::pow(tv, static_cast<double>(j));
      binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
    }
  }
  for (double& c : out) c /= tv;
  return FluxModel(kind_, std::move(out));
}

}  // namespace fracl
