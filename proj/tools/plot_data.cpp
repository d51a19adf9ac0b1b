#include "plot_data.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <vector>

namespace pcdpe::cli {

namespace {

double silverman_bandwidth(std::vector<double> xs) {
  const std::size_t n = xs.size();
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n > 1 ? n - 1 : 1));
  std::sort(xs.begin(), xs.end());
  const double q1 = xs[n / 4];
  const double q3 = xs[(3 * n) / 4];
  const double iqr = q3 - q1;
  double spread = sd;
  if (iqr > 0.0) spread = std::min(sd, iqr / 1.34);
  if (spread <= 0.0) spread = sd > 0.0 ? sd : 1e-9;
  return 0.9 * spread * std::pow(static_cast<double>(n), -0.2);
}

}  // namespace

void write_plot_data(const std::string& dir, const std::string& stem,
                     std::span<const double> values) {
  if (values.empty()) return;
  std::filesystem::create_directories(dir);
  std::vector<double> xs(values.begin(), values.end());
  const double h = silverman_bandwidth(xs);
  const auto [mn_it, mx_it] = std::minmax_element(xs.begin(), xs.end());
  const double lo = *mn_it - 3.0 * h;
  const double hi = *mx_it + 3.0 * h;

  {
    std::ofstream out(std::filesystem::path(dir) / (stem + "_kde.tsv"));
    out.precision(10);
    constexpr int kGrid = 256;
    const double norm =
        1.0 / (static_cast<double>(xs.size()) * h * std::sqrt(2.0 * M_PI));
    for (int g = 0; g < kGrid; ++g) {
      const double x = lo + (hi - lo) * g / (kGrid - 1);
      double dens = 0.0;
      for (double v : xs) {
        const double z = (x - v) / h;
        dens += std::exp(-0.5 * z * z);
      }
      out << x << '\t' << dens * norm << '\n';
    }
  }
  {
    std::ofstream out(std::filesystem::path(dir) / (stem + "_hist.tsv"));
    out.precision(10);
    const int bins = std::max(8, static_cast<int>(std::sqrt(xs.size())));
    std::vector<int> count(static_cast<std::size_t>(bins), 0);
    const double width = (*mx_it - *mn_it) / bins;
    for (double v : xs) {
      int b = width > 0.0 ? static_cast<int>((v - *mn_it) / width) : 0;
      b = std::clamp(b, 0, bins - 1);
      ++count[static_cast<std::size_t>(b)];
    }
    for (int b = 0; b < bins; ++b) {
      out << *mn_it + (b + 0.5) * width << '\t'
          << count[static_cast<std::size_t>(b)] << '\n';
    }
  }
}

}  // namespace pcdpe::cli
