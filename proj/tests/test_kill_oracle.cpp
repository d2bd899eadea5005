#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <set>
#include <vector>

#include "fracl/particle_system.hpp"
#include "support.hpp"

using namespace fracl;

namespace {

ParticleState make_state(const std::vector<double>& xs, const std::vector<int>& ss) {
  ParticleState st;
  st.n = static_cast<int>(xs.size());
  st.positions = xs;
  for (int s : ss) st.signs.push_back(static_cast<signed char>(s));
  st.alive.assign(st.n, 1);
  st.death_time.assign(st.n, std::numeric_limits<double>::infinity());
  for (int i = 0; i < st.n; ++i) st.order.push_back(i);
  std::sort(st.order.begin(), st.order.end(), [&](int a, int b) {
    if (st.positions[a] != st.positions[b]) return st.positions[a] < st.positions[b];
    return a < b;
  });
  return st;
}

std::set<std::pair<int, int>> as_set(const KillReport& rep) {
  std::set<std::pair<int, int>> out;
  for (const KillEvent& e : rep.pairs)
    out.insert({std::min(e.i, e.j), std::max(e.i, e.j)});
  return out;
}

std::set<std::pair<int, int>> as_set(const std::vector<std::pair<int, int>>& pairs) {
  std::set<std::pair<int, int>> out;
  for (auto [a, b] : pairs) out.insert({std::min(a, b), std::max(a, b)});
  return out;
}

}  // namespace

// Exhaustive agreement of the O(N) stack scan with the literal recursive
// "kill the leftmost couple" rule: all sign patterns x all adjacent-gap
// patterns in {eps/2, 2 eps} for N <= 10.
TEST_CASE("stack scan equals the recursive leftmost rule, exhaustively") {
  const double eps = 0.1;
  long long checked = 0;
  for (int n = 1; n <= 10; ++n) {
    for (unsigned sbits = 0; sbits < (1u << n); ++sbits) {
      for (unsigned gbits = 0; gbits < (1u << (n - 1)); ++gbits) {
        std::vector<double> xs(n);
        std::vector<int> ss(n);
        double x = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i > 0) x += (gbits >> (i - 1)) & 1u ? 2.0 * eps : 0.5 * eps;
          xs[i] = x;
          ss[i] = (sbits >> i) & 1u ? 1 : -1;
        }
        auto st = make_state(xs, ss);
        auto scan = kill_pairs(st, eps, 0.0);
        auto oracle = test_support::recursive_leftmost_kills(xs, ss, eps);
        REQUIRE(as_set(scan) == as_set(oracle));
        ++checked;
      }
    }
  }
  CHECK(checked == 699050);  // sum over n of 2^n * 2^(n-1) = (4^11 - 4) / 6
}

TEST_CASE("stack scan equals the recursive rule on random real-valued configurations") {
  RngStream rng(555, 0);
  for (int rep = 0; rep < 2000; ++rep) {
    int n = 2 + static_cast<int>(rng.next_open01() * 9);
    std::vector<double> xs(n);
    std::vector<int> ss(n);
    for (int i = 0; i < n; ++i) {
      xs[i] = rng.next_uniform(0, 1);
      ss[i] = rng.next_open01() < 0.5 ? 1 : -1;
    }
    double eps = rng.next_uniform(0.01, 0.5);
    auto st = make_state(xs, ss);
    auto scan = kill_pairs(st, eps, 0.0);
    auto oracle = test_support::recursive_leftmost_kills(xs, ss, eps);
    REQUIRE(as_set(scan) == as_set(oracle));
  }
}

TEST_CASE("ties at equal positions with opposite signs count as distance zero") {
  auto st = make_state({0.5, 0.5}, {1, -1});
  auto rep = kill_pairs(st, 1e-9, 0.0);
  CHECK(rep.pairs.size() == 1);
  CHECK(st.order.empty());
}
