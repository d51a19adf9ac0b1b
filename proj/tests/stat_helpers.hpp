#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "pcdpe/geometry.hpp"
#include "pcdpe/inference.hpp"

namespace pcdpe::testhelp {

// Anderson-Darling A^2 against a fully specified standard normal.
// Critical values (case 0): 2.492 (alpha = 0.05), 3.857 (alpha = 0.01).
inline double anderson_darling_normal(std::vector<double> z) {
  std::sort(z.begin(), z.end());
  const std::size_t n = z.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = std::clamp(norm_cdf(z[i]), 1e-300, 1.0 - 1e-16);
    const double v =
        std::clamp(norm_cdf(z[n - 1 - i]), 1e-300, 1.0 - 1e-16);
    acc += (2.0 * static_cast<double>(i) + 1.0) *
           (std::log(u) + std::log1p(-v));
  }
  return -static_cast<double>(n) - acc / static_cast<double>(n);
}

// Two-sample Kolmogorov-Smirnov statistic.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    const double fa = static_cast<double>(i) / static_cast<double>(a.size());
    const double fb = static_cast<double>(j) / static_cast<double>(b.size());
    d = std::max(d, std::abs(fa - fb));
  }
  return d;
}

// Reject threshold for the two-sample KS test: c(alpha) sqrt((n+m)/(n m));
// c(0.01) = 1.628, c(0.05) = 1.358.
inline double ks_two_sample_threshold(std::size_t n, std::size_t m,
                                      double c_alpha) {
  return c_alpha * std::sqrt((static_cast<double>(n) + static_cast<double>(m)) /
                             (static_cast<double>(n) * static_cast<double>(m)));
}

// Equal-area 16-cell index from two levels of triangle quadrisection.
inline int bary_cell16(Bary b) {
  const auto quad = [](double& b1, double& b2, double& b3) {
    if (b1 >= 0.5) {
      b1 = 2.0 * b1 - 1.0;
      b2 *= 2.0;
      b3 *= 2.0;
      return 0;
    }
    if (b2 >= 0.5) {
      b2 = 2.0 * b2 - 1.0;
      b1 *= 2.0;
      b3 *= 2.0;
      return 1;
    }
    if (b3 >= 0.5) {
      b3 = 2.0 * b3 - 1.0;
      b1 *= 2.0;
      b2 *= 2.0;
      return 2;
    }
    b1 = 1.0 - 2.0 * b1;
    b2 = 1.0 - 2.0 * b2;
    b3 = 1.0 - 2.0 * b3;
    return 3;
  };
  double b1 = b.b1, b2 = b.b2, b3 = b.b3;
  const int first = quad(b1, b2, b3);
  const int second = quad(b1, b2, b3);
  return 4 * first + second;
}

// Chi-square statistic for uniform counts over k cells.
inline double chi_square_uniform(std::span<const int> counts,
                                 std::size_t total) {
  const double expected =
      static_cast<double>(total) / static_cast<double>(counts.size());
  double stat = 0.0;
  for (int c : counts) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  return stat;
}

// chi-square(df = 15) upper critical value at alpha = 0.01
inline constexpr double kChi2_15_At01 = 30.5779;

inline double binomial_tolerance(double p, int n_mc) {
  return 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(n_mc)) + 0.01;
}

}  // namespace pcdpe::testhelp
