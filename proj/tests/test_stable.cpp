#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "fracl/stable.hpp"
#include "support.hpp"

using fracl::StableDriver;
using fracl::characteristic_exponent;
using fracl::empirical_char_function;

namespace {

std::vector<double> draw(double alpha, double dt, int m, std::uint64_t seed,
                         std::uint64_t stream = 1) {
  StableDriver d(alpha, seed, stream);
  std::vector<double> out(m);
  for (int i = 0; i < m; ++i) out[i] = d.sample_increment(dt);
  return out;
}

}  // namespace

TEST_CASE("characteristic exponent is |xi|^alpha") {
  CHECK(characteristic_exponent(2, 3) == doctest::Approx(9.0));
  CHECK(characteristic_exponent(1, -2) == doctest::Approx(2.0));
  CHECK(characteristic_exponent(0.5, 4) == doctest::Approx(2.0));
}

TEST_CASE("empirical characteristic function basics") {
  std::vector<double> zeros = {0.0, 0.0, 0.0};
  auto v = empirical_char_function(zeros, 5.0);
  CHECK(v.real() == doctest::Approx(1.0));
  CHECK(v.imag() == doctest::Approx(0.0));

  std::vector<double> pair = {0.7, -0.7};
  auto w = empirical_char_function(pair, 2.3);
  CHECK(w.real() == doctest::Approx(std::cos(2.3 * 0.7)));
  CHECK(w.imag() == doctest::Approx(0.0));

  std::vector<double> empty;
  CHECK_THROWS(empirical_char_function(empty, 1.0));
}

TEST_CASE("alpha=2 increment has variance 2 dt") {
  auto xs = draw(2.0, 0.5, 100000, 2024);
  double s2 = 0.0;
  for (double x : xs) s2 += x * x;
  s2 /= xs.size();
  CHECK(s2 > 0.97 * 1.0);
  CHECK(s2 < 1.03 * 1.0);
}

TEST_CASE("alpha=1 draws are standard Cauchy: median near 0") {
  auto xs = draw(1.0, 1.0, 100000, 99);
  std::nth_element(xs.begin(), xs.begin() + xs.size() / 2, xs.end());
  double median = xs[xs.size() / 2];
  CHECK(std::abs(median) < 0.02);
}

TEST_CASE("self-similarity: increment over h equals h^{1/alpha} unit draw in law") {
  const double alpha = 0.7, h = 0.3;
  auto a = draw(alpha, h, 100000, 5, 1);
  auto b = draw(alpha, 1.0, 100000, 5, 2);
  for (double& x : b) x *= std::pow(h, 1.0 / alpha);
  double d = test_support::ks_statistic(a, b);
  CHECK(d < test_support::ks_critical_1pct(a.size(), b.size()));
}

TEST_CASE("characteristic-function law across alpha and xi") {
  const int m = 100000;
  const double tol = 3.0 / std::sqrt(static_cast<double>(m)) + 0.005;
  for (double alpha : {0.5, 1.0, 1.5, 2.0}) {
    auto xs = draw(alpha, 1.0, m, 7777);
    for (double xi : {0.5, 1.0, 2.0}) {
      auto phi = empirical_char_function(xs, xi);
      double target = std::exp(-std::pow(std::abs(xi), alpha));
      CHECK(std::abs(phi - std::complex<double>(target, 0.0)) < tol);
    }
  }
}

TEST_CASE("symmetry: draws and negated draws agree in law (KS at 1%)") {
  for (double alpha : {0.5, 1.3, 2.0}) {
    auto xs = draw(alpha, 1.0, 100000, 31);
    auto neg = xs;
    for (double& x : neg) x = -x;
    double d = test_support::ks_statistic(xs, neg);
    CHECK(d < test_support::ks_critical_1pct(xs.size(), neg.size()));
  }
}

TEST_CASE("reproducibility and stream independence") {
  auto a = draw(1.5, 0.1, 100, 12, 3);
  auto b = draw(1.5, 0.1, 100, 12, 3);
  CHECK(a == b);
  auto c = draw(1.5, 0.1, 100, 12, 4);
  CHECK(a != c);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS(StableDriver(0.0, 1, 1));
  CHECK_THROWS(StableDriver(2.5, 1, 1));
  CHECK_THROWS(StableDriver(-1.0, 1, 1));
  StableDriver d(1.5, 1, 1);
  CHECK_THROWS(d.sample_increment(0.0));
  CHECK_THROWS(d.sample_increment(-1.0));
}

TEST_CASE("heavy tails exist for small alpha") {
  auto xs = draw(0.5, 1.0, 20000, 3);
  double big = 0.0;
  for (double x : xs) big = std::max(big, std::abs(x));
  CHECK(big > 1e4);  // P(|X| > 1e4) ~ 0.8% per draw at alpha = 0.5
}
