#pragma once

#include <cstdint>
#include <vector>

#include "pcdpe/mc.hpp"

namespace pcdpe {

// Standard normal CDF (via erfc; |error| < 1e-15).
double norm_cdf(double x);
// Inverse standard normal CDF: Acklam's rational approximation refined by one
// Halley step on erfc (|relative error| well below 1e-10).
double norm_quantile(double p);

// R = sqrt(n) (rho - mu) / sqrt(4 nu).
double standardized_stat(double rho, double mu, double four_nu, double n);

enum class CriticalSource { Asymptotic, MonteCarlo };

struct TestOutcome {
  double statistic = 0.0;  // standardized statistic R
  double p_value = 0.0;
  Alternative direction = Alternative::Segregation;
  CriticalSource source = CriticalSource::Asymptotic;
  double alpha = 0.05;
  double critical = 0.0;  // z_alpha scale for asymptotic, density scale for MC
  bool reject = false;
};

// One-sided asymptotic test: against segregation rejects for R > z_alpha,
// against association for R < -z_alpha.
TestOutcome normal_test(double statistic, Alternative direction, double alpha);

// Empirical critical values from null replicates: the (1-alpha) quantile for
// segregation and the alpha quantile for association, using the order
// statistic at ceil(q * N).
struct McCriticalValues {
  double c_seg = 0.0;
  double c_assoc = 0.0;
};

McCriticalValues critical_values_from_sample(std::vector<double> null_densities,
                                             double alpha);

McCriticalValues mc_critical_values(const Geometry& geometry, ProximityParam r,
                                    EdgeMode mode, int n, int n_mc,
                                    double alpha, std::uint64_t seed,
                                    int threads = 0);

// Empirical size / power estimation over an r-grid.
struct PowerConfig {
  Geometry geometry = Triangle::equilateral();
  std::vector<ProximityParam> r_list;
  EdgeMode mode = EdgeMode::And;
  int n = 0;
  int n_mc = 0;
  std::vector<PatternSpec> alternatives;
  double alpha = 0.05;
  CriticalSource source = CriticalSource::MonteCarlo;
  std::uint64_t seed = 0;
  int threads = 0;
};

struct PowerRow {
  ProximityParam r = ProximityParam::finite(1.0);
  // Critical values on the density scale (MC source only).
  double c_seg = 0.0;
  double c_assoc = 0.0;
  // Empirical size in each rejection direction.
  double alpha_hat_seg = 0.0;
  double alpha_hat_assoc = 0.0;
  // Empirical power per configured alternative.
  std::vector<double> beta_hat;
};

struct PowerEstimate {
  std::vector<PowerRow> rows;
  int n_mc = 0;
  std::uint64_t seed = 0;
};

PowerEstimate empirical_power(const PowerConfig& cfg);

}  // namespace pcdpe
