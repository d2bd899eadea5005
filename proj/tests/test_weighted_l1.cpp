#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "fracl/rng.hpp"
#include "fracl/weighted_l1.hpp"

using fracl::PwLinear;
using fracl::StepFn;
using fracl::weighted_l1_distance;

namespace {

StepFn random_step(fracl::RngStream& rng, int pieces) {
  StepFn f;
  double x = rng.next_uniform(-5, -3);
  for (int i = 0; i < pieces; ++i) {
    f.xs.push_back(x);
    f.vals.push_back(rng.next_uniform(-1, 1));
    x += rng.next_uniform(0.01, 2.0);
  }
  f.vals.back() = 0.0;  // constant tails keep the metric finite
  f.left_val = 0.0;
  return f;
}

PwLinear as_pw(const StepFn& f) { return PwLinear::step(f.xs, f.vals, f.left_val); }

}  // namespace

TEST_CASE("identical functions give zero") {
  StepFn f;
  f.xs = {0.0, 1.0, 2.5};
  f.vals = {0.5, -0.25, 0.0};
  CHECK(weighted_l1_distance(f, as_pw(f)) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("|F-G| = indicator of [0,1] gives arctan(1) = pi/4") {
  StepFn f;
  f.xs = {0.0, 1.0};
  f.vals = {1.0, 0.0};
  PwLinear g = PwLinear::constant(0.0);
  CHECK(weighted_l1_distance(f, g) == doctest::Approx(std::numbers::pi / 4).epsilon(1e-12));
}

TEST_CASE("|F-G| = 1 on the whole line gives pi") {
  StepFn f;  // constant 0
  PwLinear g = PwLinear::constant(1.0);
  CHECK(weighted_l1_distance(f, g) == doctest::Approx(std::numbers::pi).epsilon(1e-12));
}

TEST_CASE("constant-vs-constant through the bounded overload adds exact tails") {
  StepFn f;
  PwLinear g = PwLinear::constant(1.0);
  double d = weighted_l1_distance(f, g, -7.0, 3.0);
  CHECK(d == doctest::Approx(std::numbers::pi).epsilon(1e-12));
}

TEST_CASE("linear segment handled to quadrature accuracy") {
  // F = 0, G = interpolant 0 at 0 -> 1 at 1, constant outside
  StepFn f;
  PwLinear g = PwLinear::interpolant({0.0, 1.0}, {0.0, 1.0});
  // integral of x/(1+x^2) over [0,1] = ln(2)/2; plus right tail of 1
  double expect = 0.5 * std::log(2.0) + (std::numbers::pi / 2 - std::atan(1.0));
  CHECK(weighted_l1_distance(f, g) == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("sign change inside a linear piece is split exactly") {
  // F = 1/2 on [0,1) then 0; G ramps 0 -> 1 on [0,1]: crossing at x = 1/2
  StepFn f;
  f.xs = {0.0, 1.0};
  f.vals = {0.5, 0.0};
  PwLinear g = PwLinear::interpolant({0.0, 1.0}, {0.0, 1.0});
  // Int_0^1 |1/2 - x|/(1+x^2) dx + right tail |0 - 1| * (pi/2 - pi/4)
  // closed form: Int (1/2 - x)/(1+x^2) on [0,1/2] = atan(1/2)/2 - ln(1.25)/2,
  //              Int (x - 1/2)/(1+x^2) on [1/2,1] = ln(2/1.25)/2 - (atan(1)-atan(1/2))/2
  double a = 0.5 * std::atan(0.5) - 0.5 * std::log(1.25);
  double b = 0.5 * std::log(2.0 / 1.25) - 0.5 * (std::atan(1.0) - std::atan(0.5));
  double expect = a + b + (std::numbers::pi / 2 - std::atan(1.0));
  CHECK(weighted_l1_distance(f, g) == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("pseudometric properties on random step triples") {
  fracl::RngStream rng(2718, 0);
  for (int rep = 0; rep < 200; ++rep) {
    StepFn f = random_step(rng, 1 + static_cast<int>(rng.next_open01() * 6));
    StepFn g = random_step(rng, 1 + static_cast<int>(rng.next_open01() * 6));
    StepFn h = random_step(rng, 1 + static_cast<int>(rng.next_open01() * 6));
    double dfg = weighted_l1_distance(f, as_pw(g));
    double dgf = weighted_l1_distance(g, as_pw(f));
    double dfh = weighted_l1_distance(f, as_pw(h));
    double dgh = weighted_l1_distance(g, as_pw(h));
    CHECK(dfg == doctest::Approx(dgf).epsilon(1e-10));
    CHECK(dfg <= dfh + dgh + 1e-10);
    CHECK(dfg >= 0.0);
  }
}

TEST_CASE("far-away breakpoints contribute their exact arctan tails") {
  StepFn f;
  f.xs = {1e8, 1e9};
  f.vals = {0.5, 0.0};
  PwLinear g = PwLinear::constant(0.0);
  double expect = 0.5 * (std::atan(1e9) - std::atan(1e8));
  CHECK(weighted_l1_distance(f, g) == doctest::Approx(expect).epsilon(1e-9));
}
