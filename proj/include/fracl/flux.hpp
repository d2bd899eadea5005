#pragma once

#include <string>
#include <vector>

namespace fracl {

/// Flux A of the conservation law, represented as a polynomial so that the
/// normalization substitution x -> A(a + s x)/s stays exact.  A' is the exact
/// derivative; sup_abs_aprime is a certified upper bound of |A'| on [-1,1]
/// (the range of the signed empirical CDF).
class FluxModel {
 public:
  enum class Kind { burgers, polynomial };

  static FluxModel burgers();  // A(x) = x^2 / 2
  static FluxModel polynomial(std::vector<double> coeffs);

  double a(double x) const;
  double aprime(double x) const;
  double sup_abs_aprime() const { return sup_abs_aprime_; }
  Kind kind() const { return kind_; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  /// The rescaled flux x -> A(offset + x * tv) / tv used after normalizing the
  /// initial measure; its derivative is A'(offset + x * tv).
  FluxModel rescaled(double offset, double tv) const;

 private:
  FluxModel(Kind kind, std::vector<double> coeffs);

  Kind kind_;
  std::vector<double> coeffs_;  // A(x) = sum_k coeffs_[k] x^k
  double sup_abs_aprime_;
};

}  // namespace fracl
