#include "pcdpe/inference.hpp"

#include <algorithm>
#include <cmath>

namespace pcdpe {

double norm_cdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

namespace {

// Acklam's rational approximation to the inverse normal CDF
// (|relative error| < 1.15e-9 over (0,1)).
double acklam(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double plow = 0.02425;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
            c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
             c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double t = q * q;
  return (((((a[0] * t + a[1]) * t + a[2]) * t + a[3]) * t + a[4]) * t +
          a[5]) *
         q /
         (((((b[0] * t + b[1]) * t + b[2]) * t + b[3]) * t + b[4]) * t + 1.0);
}

}  // namespace

double norm_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("normal quantile needs p in (0,1)");
  }
  double x = acklam(p);
  // One Halley refinement against the erfc-based CDF.
  const double e = norm_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
  x = x - u / (1.0 + x * u / 2.0);
  return x;
}

double standardized_stat(double rho, double mu, double four_nu, double n) {
  if (!(four_nu > 0.0)) {
    throw DegenerateStatisticError(
        "limiting variance is not positive; the standardized edge-density "
        "statistic is degenerate here (AND graphs need r in (1, inf))");
  }
  if (!(n >= 2.0)) throw DomainError("statistic needs n >= 2");
  return std::sqrt(n) * (rho - mu) / std::sqrt(four_nu);
}

TestOutcome normal_test(double statistic, Alternative direction,
                        double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha not in (0,1)");
  TestOutcome out;
  out.statistic = statistic;
  out.direction = direction;
  out.source = CriticalSource::Asymptotic;
  out.alpha = alpha;
  const double z = norm_quantile(1.0 - alpha);
  if (direction == Alternative::Segregation) {
    out.p_value = 1.0 - norm_cdf(statistic);
    out.critical = z;
    out.reject = statistic > z;
  } else {
    out.p_value = norm_cdf(statistic);
    out.critical = -z;
    out.reject = statistic < -z;
  }
  return out;
}

McCriticalValues critical_values_from_sample(std::vector<double> xs,
                                             double alpha) {
  if (xs.size() < 100) {
    throw DomainError("Monte Carlo critical values need at least 100 replicates");
  }
  std::sort(xs.begin(), xs.end());
  const auto order_stat = [&](double q) {
    // Order statistic at ceil(q * N), 1-indexed.
    const std::size_t k = static_cast<std::size_t>(
        std::ceil(q * static_cast<double>(xs.size())));
    return xs[std::min(xs.size(), std::max<std::size_t>(k, 1)) - 1];
  };
  return {order_stat(1.0 - alpha), order_stat(alpha)};
}

McCriticalValues mc_critical_values(const Geometry& geometry, ProximityParam r,
                                    EdgeMode mode, int n, int n_mc,
                                    double alpha, std::uint64_t seed,
                                    int threads) {
  McConfig cfg;
  cfg.geometry = geometry;
  cfg.pattern = PatternSpec::null();
  cfg.n = n;
  cfg.r_list = {r};
  cfg.n_mc = n_mc;
  cfg.seed = seed;
  cfg.threads = threads;
  const auto results = run_replicates(cfg);
  return critical_values_from_sample(
      density_column(results, 0,
                     mode == EdgeMode::And ? DensityKind::And : DensityKind::Or),
      alpha);
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 finalizer over (seed, salt)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

PowerEstimate empirical_power(const PowerConfig& cfg) {
  if (cfg.n_mc < 100) throw DomainError("power estimation needs n_mc >= 100");
  const DensityKind kind =
      cfg.mode == EdgeMode::And ? DensityKind::And : DensityKind::Or;

  McConfig base;
  base.geometry = cfg.geometry;
  base.n = cfg.n;
  base.r_list = cfg.r_list;
  base.n_mc = cfg.n_mc;
  base.threads = cfg.threads;

  McConfig null_cfg = base;
  null_cfg.pattern = PatternSpec::null();
  null_cfg.seed = mix_seed(cfg.seed, 0);
  const auto null_results = run_replicates(null_cfg);

  std::vector<std::vector<double>> alt_columns(
      cfg.alternatives.size() * cfg.r_list.size());
  for (std::size_t a = 0; a < cfg.alternatives.size(); ++a) {
    McConfig alt_cfg = base;
    alt_cfg.pattern = cfg.alternatives[a];
    alt_cfg.seed = mix_seed(cfg.seed, a + 1);
    const auto alt_results = run_replicates(alt_cfg);
    for (std::size_t k = 0; k < cfg.r_list.size(); ++k) {
      alt_columns[a * cfg.r_list.size() + k] =
          density_column(alt_results, static_cast<int>(k), kind);
    }
  }

  PowerEstimate est;
  est.n_mc = cfg.n_mc;
  est.seed = cfg.seed;
  const double n_mc = static_cast<double>(cfg.n_mc);
  for (std::size_t k = 0; k < cfg.r_list.size(); ++k) {
    PowerRow row;
    row.r = cfg.r_list[k];
    const auto null_col = density_column(null_results, static_cast<int>(k), kind);

    double c_seg = 0.0, c_assoc = 0.0;
    if (cfg.source == CriticalSource::MonteCarlo) {
      const auto cv = critical_values_from_sample(null_col, cfg.alpha);
      c_seg = cv.c_seg;
      c_assoc = cv.c_assoc;
    } else {
      const ProximityParam r = cfg.r_list[k];
      const double mu = mu_null(cfg.mode, r);
      const double four_nu = 4.0 * nu_null(cfg.mode, r);
      if (!(four_nu > 0.0)) {
        throw DegenerateStatisticError(
            "asymptotic critical values are unavailable where the limiting "
            "variance vanishes");
      }
      const double z = norm_quantile(1.0 - cfg.alpha);
      const double half = z * std::sqrt(four_nu / cfg.n);
      c_seg = mu + half;
      c_assoc = mu - half;
    }
    row.c_seg = c_seg;
    row.c_assoc = c_assoc;

    int seg_rej = 0, assoc_rej = 0;
    for (double x : null_col) {
      seg_rej += x > c_seg ? 1 : 0;
      assoc_rej += x < c_assoc ? 1 : 0;
    }
    row.alpha_hat_seg = seg_rej / n_mc;
    row.alpha_hat_assoc = assoc_rej / n_mc;

    for (std::size_t a = 0; a < cfg.alternatives.size(); ++a) {
      const auto& col = alt_columns[a * cfg.r_list.size() + k];
      int rej = 0;
      if (cfg.alternatives[a].kind == PatternSpec::Kind::Association) {
        for (double x : col) rej += x < c_assoc ? 1 : 0;
      } else {
        for (double x : col) rej += x > c_seg ? 1 : 0;
      }
      row.beta_hat.push_back(rej / n_mc);
    }
    est.rows.push_back(std::move(row));
  }
  return est;
}

}  // namespace pcdpe
