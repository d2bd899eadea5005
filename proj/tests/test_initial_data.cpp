#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "fracl/initial_data.hpp"
#include "support.hpp"

using fracl::Atom;
using fracl::FluxModel;
using fracl::Piece;
using fracl::RngStream;
using fracl::SignedBVInitial;

namespace {

SignedBVInitial paper_measure() {
  // the four-atom example: delta_-3 - delta_-2 + delta_2 - delta_3
  return SignedBVInitial({{-3, 1}, {-2, -1}, {2, 1}, {3, -1}}, {}, 0.0);
}

}  // namespace

TEST_CASE("normalize the four-atom measure: masses 1/4, flux A(4x)/4") {
  auto [init, flux] = fracl::normalize(paper_measure(), FluxModel::burgers());
  CHECK(init.is_normalized());
  CHECK(init.tv_raw() == doctest::Approx(1.0).epsilon(1e-13));
  for (const Atom& a : init.atoms()) CHECK(std::abs(a.mass) == doctest::Approx(0.25));
  // A(x) = x^2/2 -> A~(x) = (4x)^2/2/4 = 2 x^2, A~'(x) = 4x
  CHECK(flux.a(0.3) == doctest::Approx(2.0 * 0.09));
  CHECK(flux.aprime(0.3) == doctest::Approx(1.2));
  CHECK(flux.sup_abs_aprime() == doctest::Approx(4.0).epsilon(1e-6));
}

TEST_CASE("already-normalized point mass is unchanged") {
  SignedBVInitial raw({{0, 1}}, {}, 0.0);
  auto [init, flux] = fracl::normalize(raw, FluxModel::burgers());
  CHECK(init.atoms().size() == 1);
  CHECK(init.atoms()[0].mass == doctest::Approx(1.0));
  CHECK(flux.a(0.5) == doctest::Approx(0.125));
  CHECK(flux.aprime(0.5) == doctest::Approx(0.5));
}

TEST_CASE("normalization with offset: delta_0 mass 2, a=1") {
  SignedBVInitial raw({{0, 2}}, {}, 1.0);
  auto [init, flux] = fracl::normalize(raw, FluxModel::burgers());
  CHECK(init.atoms()[0].mass == doctest::Approx(1.0));
  CHECK(init.offset() == 0.0);
  // new A(x) = ((1+2x)^2/2)/2, new A'(x) = 1+2x
  for (double x : {-0.7, 0.0, 0.4, 1.0}) {
    CHECK(flux.a(x) == doctest::Approx((1 + 2 * x) * (1 + 2 * x) / 4.0));
    CHECK(flux.aprime(x) == doctest::Approx(1 + 2 * x));
  }
}

TEST_CASE("constant v0 (zero total variation) is rejected") {
  SignedBVInitial raw({}, {}, 0.5);
  CHECK_THROWS_WITH_AS(static_cast<void>(fracl::normalize(raw, FluxModel::burgers())),
                       doctest::Contains("constant"), std::invalid_argument);
}

TEST_CASE("flux derivative matches central differences") {
  auto flux = FluxModel::polynomial({0.1, -0.3, 0.5, 0.25});
  for (double x = -1.0; x <= 1.0; x += 0.05) {
    if (std::abs(x) < 1e-9) continue;
    double fd = (flux.a(x + 1e-6) - flux.a(x - 1e-6)) / 2e-6;
    CHECK(flux.aprime(x) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("sup |A'| dominates a dense grid") {
  auto flux = FluxModel::polynomial({0.0, 0.2, -0.9, 0.0, 1.3});
  double grid_max = 0.0;
  for (int i = 0; i <= 10000; ++i) {
    double x = -1.0 + 2.0 * i / 10000;
    grid_max = std::max(grid_max, std::abs(flux.aprime(x)));
  }
  CHECK(flux.sup_abs_aprime() >= grid_max);
}

TEST_CASE("sampling a point mass") {
  SignedBVInitial raw({{0, 1}}, {}, 0.0);
  auto [init, flux] = fracl::normalize(raw, FluxModel::burgers());
  RngStream rng(5, 0);
  auto xs = init.sample_positions(5, rng);
  CHECK(xs == std::vector<double>{0, 0, 0, 0, 0});
  CHECK(init.sample_positions(0, rng).empty());
}

TEST_CASE("sampling the four-atom measure hits each atom with frequency ~1/4") {
  auto [init, flux] = fracl::normalize(paper_measure(), FluxModel::burgers());
  RngStream rng(17, 0);
  auto xs = init.sample_positions(100000, rng);
  std::map<double, int> counts;
  for (double x : xs) counts[x]++;
  CHECK(counts.size() == 4);
  for (auto& [x, c] : counts) {
    double f = static_cast<double>(c) / xs.size();
    CHECK(f > 0.24);
    CHECK(f < 0.26);
  }
}

TEST_CASE("sampling a uniform density matches the uniform law (KS)") {
  SignedBVInitial raw({}, {{0, 1, 1}}, 0.0);
  auto [init, flux] = fracl::normalize(raw, FluxModel::burgers());
  RngStream rng(23, 0);
  auto xs = init.sample_positions(100000, rng);
  // KS against exact uniform: sup |F_emp - x|
  std::sort(xs.begin(), xs.end());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double fe = static_cast<double>(i + 1) / xs.size();
    d = std::max(d, std::abs(fe - xs[i]));
    d = std::max(d, std::abs(static_cast<double>(i) / xs.size() - xs[i]));
  }
  CHECK(d <= 0.01);
}

TEST_CASE("gamma lookup") {
  auto [init, flux] = fracl::normalize(paper_measure(), FluxModel::burgers());
  CHECK(init.gamma_at(-3) == 1);
  CHECK(init.gamma_at(-2) == -1);
  CHECK(init.gamma_at(2) == 1);
  CHECK(init.gamma_at(3) == -1);
  CHECK_THROWS(init.gamma_at(0.5));

  SignedBVInitial up({}, {{0, 1, 1}}, 0.0);
  CHECK(up.gamma_at(0.5) == 1);
}

TEST_CASE("gamma is defined at every sampled position") {
  SignedBVInitial raw({{-1, 0.5}}, {{0, 1, -1}, {2, 3, 0.5}}, 0.0);
  auto [init, flux] = fracl::normalize(raw, FluxModel::burgers());
  RngStream rng(3, 0);
  for (double x : init.sample_positions(20000, rng)) CHECK_NOTHROW(init.gamma_at(x));
}

TEST_CASE("signed CDF of the four-atom measure") {
  auto [init, flux] = fracl::normalize(paper_measure(), FluxModel::burgers());
  CHECK(init.cdf_v0(-2.5) == doctest::Approx(0.25));
  CHECK(init.cdf_v0(0.0) == doctest::Approx(0.0));
  CHECK(init.cdf_v0(-1e9) == doctest::Approx(0.0));
  CHECK(init.cdf_v0(-3.0) == doctest::Approx(0.25));  // H(0) = 1: atom at x included
  CHECK(init.cdf_v0(2.5) == doctest::Approx(0.25));
  CHECK(init.cdf_v0(1e9) == doctest::Approx(0.0));
}

TEST_CASE("total variation of the normalized CDF is 1") {
  SignedBVInitial raw({{-1, 2}}, {{0, 2, -1.5}}, 0.0);
  auto [init, flux] = fracl::normalize(raw, FluxModel::burgers());
  double tv = 0.0;
  for (const Atom& a : init.atoms()) tv += std::abs(a.mass);
  for (const Piece& p : init.pieces()) tv += std::abs(p.density) * (p.right - p.left);
  CHECK(tv == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("construction rejections") {
  CHECK_THROWS(SignedBVInitial({{0, 1}, {0, -1}}, {}, 0.0));  // equal-location atoms
  CHECK_THROWS(SignedBVInitial({{0, 0}}, {}, 0.0));           // zero mass
  CHECK_THROWS(SignedBVInitial({}, {{1, 0, 1}}, 0.0));        // inverted piece
  CHECK_THROWS(SignedBVInitial({}, {{0, 2, 1}, {1, 3, 1}}, 0.0));  // overlap
  CHECK_THROWS(SignedBVInitial({{0.5, 1}}, {{0, 1, 1}}, 0.0));     // atom inside piece
}

TEST_CASE("stratified positions of the four-atom measure split exactly") {
  auto [init, flux] = fracl::normalize(paper_measure(), FluxModel::burgers());
  auto xs = init.stratified_positions(400);
  std::map<double, int> counts;
  for (double x : xs) counts[x]++;
  for (auto& [x, c] : counts) CHECK(c == 100);
}
