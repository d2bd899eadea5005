#include "fracl/initial_data.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracl {

SignedBVInitial::SignedBVInitial(std::vector<Atom> atoms, std::vector<Piece> pieces,
                                 double offset_a)
    : atoms_(std::move(atoms)), pieces_(std::move(pieces)), offset_a_(offset_a) {
  std::sort(atoms_.begin(), atoms_.end(), [](const Atom& a, const Atom& b) { return a.x < b.x; });
  std::sort(pieces_.begin(), pieces_.end(),
            [](const Piece& a, const Piece& b) { return a.left < b.left; });
  for (const Atom& a : atoms_) {
    if (a.mass == 0.0 || !std::isfinite(a.mass) || !std::isfinite(a.x))
      throw std::invalid_argument("SignedBVInitial: atom with zero or non-finite mass");
  }
  for (std::size_t i = 1; i < atoms_.size(); ++i) {
    if (atoms_[i].x == atoms_[i - 1].x)
      throw std::invalid_argument(
          "SignedBVInitial: atoms at equal locations must be pre-merged");
  }
  for (const Piece& p : pieces_) {
    if (!(p.left < p.right) || p.density == 0.0 || !std::isfinite(p.density))
      throw std::invalid_argument("SignedBVInitial: degenerate piece");
  }
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (pieces_[i].left < pieces_[i - 1].right)
      throw std::invalid_argument("SignedBVInitial: piece interiors overlap");
  }
  for (const Atom& a : atoms_) {
    for (const Piece& p : pieces_) {
      if (a.x > p.left && a.x < p.right)
        throw std::invalid_argument("SignedBVInitial: atom inside a piece interior");
    }
  }
  tv_raw_ = 0.0;
  for (const Atom& a : atoms_) tv_raw_ += std::abs(a.mass);
  for (const Piece& p : pieces_) tv_raw_ += std::abs(p.density) * (p.right - p.left);
  build_components();
}

void SignedBVInitial::build_components() {
  components_.clear();
  std::size_t ia = 0, ip = 0;
  while (ia < atoms_.size() || ip < pieces_.size()) {
    bool take_atom;
    if (ia == atoms_.size())
      take_atom = false;
    else if (ip == pieces_.size())
      take_atom = true;
    else
      take_atom = atoms_[ia].x <= pieces_[ip].left;
    if (take_atom) {
      const Atom& a = atoms_[ia++];
      components_.push_back({std::abs(a.mass), a.mass > 0 ? 1 : -1, true, a.x, a.x});
    } else {
      const Piece& p = pieces_[ip++];
      components_.push_back({std::abs(p.density) * (p.right - p.left),
                             p.density > 0 ? 1 : -1, false, p.left, p.right});
    }
  }
}

bool SignedBVInitial::is_normalized() const {
  return offset_a_ == 0.0 && std::abs(tv_raw_ - 1.0) <= 1e-12;
}

int SignedBVInitial::gamma_at(double x) const {
  for (const Component& c : components_) {
    if (c.is_atom ? (x == c.x0) : (x >= c.x0 && x <= c.x1)) return c.sign;
  }
  throw std::invalid_argument("gamma_at: x outside the support of |u0|");
}

double SignedBVInitial::cdf_v0(double x) const {
  double s = 0.0;
  for (const Atom& a : atoms_)
    if (a.x <= x) s += a.mass;
  for (const Piece& p : pieces_)
    if (x > p.left) s += p.density * (std::min(x, p.right) - p.left);
  return s;
}

std::vector<double> SignedBVInitial::sample_positions(int n, RngStream& rng) const {
  if (n < 0) throw std::invalid_argument("sample_positions: negative n");
  if (components_.empty()) throw std::invalid_argument("sample_positions: empty measure");
  std::vector<double> cum(components_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    acc += components_[i].weight;
    cum[i] = acc;
  }
  std::vector<double> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    double u = rng.next_open01() * acc;
    std::size_t i = std::lower_bound(cum.begin(), cum.end(), u) - cum.begin();
    if (i >= components_.size()) i = components_.size() - 1;
    const Component& c = components_[i];
    if (c.is_atom) {
      out.push_back(c.x0);
    } else {
      double lo = i == 0 ? 0.0 : cum[i - 1];
      double frac = (u - lo) / c.weight;
      out.push_back(c.x0 + frac * (c.x1 - c.x0));
    }
  }
  return out;
}

std::vector<double> SignedBVInitial::stratified_positions(int n) const {
  if (n < 0) throw std::invalid_argument("stratified_positions: negative n");
  if (components_.empty()) throw std::invalid_argument("stratified_positions: empty measure");
  // largest-remainder allocation of n over component weights
  std::vector<int> counts(components_.size(), 0);
  std::vector<std::pair<double, std::size_t>> rema;
  int assigned = 0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    double share = static_cast<double>(n) * components_[i].weight / tv_raw_;
    counts[i] = static_cast<int>(std::floor(share + 1e-12));
    assigned += counts[i];
    rema.push_back({share - counts[i], i});
  }
  std::sort(rema.begin(), rema.end(), [](auto& a, auto& b) { return a.first > b.first; });
  for (int k = 0; k < n - assigned; ++k) counts[rema[k % rema.size()].second]++;
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const Component& c = components_[i];
    for (int j = 0; j < counts[i]; ++j) {
      if (c.is_atom)
        out.push_back(c.x0);
      else
        out.push_back(c.x0 + (j + 0.5) / counts[i] * (c.x1 - c.x0));
    }
  }
  return out;
}

std::pair<SignedBVInitial, FluxModel> normalize(const SignedBVInitial& raw,
                                                const FluxModel& flux) {
  double tv = raw.tv_raw();
  if (!(tv > 0.0))
    throw std::invalid_argument("normalize: v0 is constant (zero total variation)");
  std::vector<Atom> atoms = raw.atoms();
  for (Atom& a : atoms) a.mass /= tv;
  std::vector<Piece> pieces = raw.pieces();
  for (Piece& p : pieces) p.density /= tv;
  SignedBVInitial out(std::move(atoms), std::move(pieces), 0.0);
  return {std::move(out), flux.rescaled(raw.offset(), tv)};
}

}  // namespace fracl
