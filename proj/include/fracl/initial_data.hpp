#pragma once

#include <utility>
#include <vector>

#include "fracl/flux.hpp"
#include "fracl/rng.hpp"

namespace fracl {

struct Atom {
  double x;
  double mass;  // signed, nonzero
};

struct Piece {
  double left;
  double right;
  double density;  // signed constant density, nonzero
};

/// Bounded-variation initial datum v0 = a + H*u0, modelled as a finite signed
/// measure u0 made of atoms plus constant-density pieces, together with the
/// constant offset a.  After normalize() the measure has total variation 1
/// and offset 0, so |u0| is a probability measure and gamma = du0/d|u0| is
/// the +-1 sign density.
class SignedBVInitial {
 public:
  SignedBVInitial(std::vector<Atom> atoms, std::vector<Piece> pieces, double offset_a);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  double offset() const { return offset_a_; }
  double tv_raw() const { return tv_raw_; }
  bool is_normalized() const;

  /// Sign of u0 at x (+1 or -1); x must be an atom location or lie inside a
  /// signed piece (samples never land elsewhere).
  int gamma_at(double x) const;

  /// H*u0(x) with H = 1_{[0,inf)}: right-continuous, an atom exactly at x is
  /// included.
  double cdf_v0(double x) const;

  /// n i.i.d. draws from |u0| by inverse CDF over the atom/piece components.
  std::vector<double> sample_positions(int n, RngStream& rng) const;

  /// Deterministic stratified draws: each component receives its proportional
  /// share of the n positions (largest-remainder rounding), pieces filled at
  /// mid-quantiles.
  std::vector<double> stratified_positions(int n) const;

 private:
  std::vector<Atom> atoms_;
  std::vector<Piece> pieces_;
  double offset_a_;
  double tv_raw_;

  // flattened components in position order, for sampling and sign lookup
  struct Component {
    double weight;  // |mass|
    int sign;
    bool is_atom;
    double x0, x1;  // atom: x0 == x1
  };
  std::vector<Component> components_;
  void build_components();
};

/// Normalization of the pair (v0, A): replaces the measure by u0/|u0|(R), the
/// offset by 0, and the flux by x -> A(a + x |u0|(R)) / |u0|(R).  Rejects a
/// constant v0 (zero total variation).
std::pair<SignedBVInitial, FluxModel> normalize(const SignedBVInitial& raw,
                                                const FluxModel& flux);

}  // namespace fracl
