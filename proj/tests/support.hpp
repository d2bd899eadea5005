#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace test_support {

/// Two-sample Kolmogorov-Smirnov statistic sup |F1 - F2|.
inline double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j])
      ++i;
    else
      ++j;
    double fa = static_cast<double>(i) / a.size();
    double fb = static_cast<double>(j) / b.size();
    d = std::max(d, std::abs(fa - fb));
  }
  return d;
}

/// Critical value at level 1%: c(0.01) sqrt((n+m)/(n m)) with c(0.01) = 1.628.
inline double ks_critical_1pct(std::size_t n, std::size_t m) {
  return 1.628 * std::sqrt(static_cast<double>(n + m) / (static_cast<double>(n) * m));
}

/// Literal implementation of the recursive killing rule: repeatedly find the
/// leftmost pair of alive particles at consecutive positions with opposite
/// signs and distance < eps, kill both, restart the scan.  Returns the kill
/// set as (index, index) pairs.  O(N^2); reference oracle only.
inline std::vector<std::pair<int, int>> recursive_leftmost_kills(
    const std::vector<double>& positions, const std::vector<int>& signs, double eps) {
  std::vector<int> order(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (positions[a] != positions[b]) return positions[a] < positions[b];
    return a < b;
  });
  std::vector<std::pair<int, int>> kills;
  for (;;) {
    bool found = false;
    for (std::size_t q = 0; q + 1 < order.size(); ++q) {
      int a = order[q], b = order[q + 1];
      if (signs[a] != signs[b] && positions[b] - positions[a] < eps) {
        kills.emplace_back(a, b);
        order.erase(order.begin() + q, order.begin() + q + 2);
        found = true;
        break;
      }
    }
    if (!found) return kills;
  }
}

}  // namespace test_support
