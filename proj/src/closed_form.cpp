#include "pcdpe/closed_form.hpp"

#include <cmath>
#include <limits>

#include "pcdpe/closed_form_tables.hpp"
#include "pcdpe/inference.hpp"

namespace pcdpe {

namespace {

using tables::BivariateRational;
using tables::RationalPoly;

long double horner(const double* c, int n, long double x) {
  long double acc = 0.0L;
  for (int i = n - 1; i >= 0; --i) acc = acc * x + c[i];
  return acc;
}

double eval(const RationalPoly& rp, double r) {
  const long double x = r;
  return static_cast<double>(horner(rp.num, rp.num_len, x) /
                             horner(rp.den, rp.den_len, x));
}

// Branch index for the four mean intervals; breakpoints belong to the right.
int mean_branch(double r) {
  int k = 0;
  while (k < 3 && r >= tables::kMeanBreaks[k]) ++k;
  return k;
}

int nu_branch(double r) {
  int k = 0;
  while (k < 10 && r >= tables::kNuBreaks[k]) ++k;
  return k;
}

double check_r(ProximityParam r) {
  if (!r.is_infinite() && r.value() < 1.0) {
    throw DomainError("r must satisfy r >= 1");
  }
  return r.is_infinite() ? 0.0 : r.value();
}

const long double kSqrt3 = 1.7320508075688772935274463415058724L;

long double biv_horner(const tables::BivariatePoly& p, long double r,
                       long double e) {
  long double acc = 0.0L;
  for (int i = p.nr - 1; i >= 0; --i) {
    long double row = 0.0L;
    const double* a = p.a + static_cast<std::size_t>(i) * p.ne;
    const double* b =
        p.b ? p.b + static_cast<std::size_t>(i) * p.ne : nullptr;
    for (int j = p.ne - 1; j >= 0; --j) {
      long double c = a[j];
      if (b && b[j] != 0.0) c += b[j] * kSqrt3;
      row = row * e + c;
    }
    acc = acc * r + row;
  }
  return acc;
}

double eval(const BivariateRational& br, double r, double e) {
  return static_cast<double>(biv_horner(br.num, r, e) /
                             biv_horner(br.den, r, e));
}

const BivariateRational* alt_family(EdgeMode mode, Alternative alt) {
  if (alt == Alternative::Segregation) {
    return mode == EdgeMode::And ? tables::kMuSegAnd : tables::kMuSegOr;
  }
  return mode == EdgeMode::And ? tables::kMuAssocAnd : tables::kMuAssocOr;
}

}  // namespace

double alt_epsilon_limit(Alternative alt) {
  if (alt == Alternative::Segregation) return std::sqrt(3.0) / 8.0;
  return (7.0 * std::sqrt(3.0) - 3.0 * std::sqrt(15.0)) / 12.0;
}

double mu_null(EdgeMode mode, ProximityParam r) {
  const double rv = check_r(r);
  if (r.is_infinite()) return 1.0;
  const auto* fam = mode == EdgeMode::And ? tables::kMuAnd : tables::kMuOr;
  return eval(fam[mean_branch(rv)], rv);
}

double var_h_null(EdgeMode mode, ProximityParam r) {
  const double rv = check_r(r);
  if (r.is_infinite()) return 0.0;
  const auto* fam = mode == EdgeMode::And ? tables::kVarAnd : tables::kVarOr;
  return eval(fam[mean_branch(rv)], rv);
}

double nu_null(EdgeMode mode, ProximityParam r) {
  const double rv = check_r(r);
  if (r.is_infinite()) return 0.0;
  const auto* fam = mode == EdgeMode::And ? tables::kNuAnd : tables::kNuOr;
  return eval(fam[nu_branch(rv)], rv);
}

JointPmf joint_pmf(EdgeMode mode, ProximityParam r) {
  const double mu = mu_null(mode, r);
  const double nu = nu_null(mode, r);
  JointPmf pmf;
  pmf.p11 = nu + mu * mu;
  pmf.p00 = 1.0 - 2.0 * mu + pmf.p11;
  pmf.p01 = pmf.p10 = (1.0 - pmf.p00 - pmf.p11) / 2.0;
  return pmf;
}

double mu_alt(EdgeMode mode, Alternative alt, ProximityParam r, double eps) {
  const double rv = check_r(r);
  if (eps < 0.0 || eps >= alt_epsilon_limit(alt)) {
    throw DomainError(
        "epsilon outside the validity window of the alternative-mean "
        "formulas");
  }
  if (r.is_infinite()) return 1.0;
  return eval(alt_family(mode, alt)[mean_branch(rv)], rv, eps);
}

double mu_alt_eps2(EdgeMode mode, Alternative alt, double r) {
  // Central second differences with Richardson extrapolation on steps
  // h, h/2, h/4; the alternative means are smooth rationals in eps, so the
  // three-level table reaches ~1e-8 relative error comfortably.
  // The branch is a rational function of eps, so it evaluates fine at small
  // negative eps even though the model is only meaningful for eps >= 0.
  const auto& branch = alt_family(mode, alt)[mean_branch(r)];
  const auto d2 = [&](double h) {
    const double f0 = eval(branch, r, 0.0);
    const double fp = eval(branch, r, h);
    const double fm = eval(branch, r, -h);
    return (fp - 2.0 * f0 + fm) / (h * h);
  };
  const double h0 = 1e-2;
  const double a0 = d2(h0), a1 = d2(h0 / 2.0), a2 = d2(h0 / 4.0);
  const double b0 = a1 + (a1 - a0) / 3.0;  // O(h^4)
  const double b1 = a2 + (a2 - a1) / 3.0;
  return b1 + (b1 - b0) / 15.0;  // O(h^6)
}

double pae(EdgeMode mode, Alternative alt, double r) {
  if (r < 1.0) throw DomainError("r must satisfy r >= 1");
  const auto value_at = [&](double x) {
    const double d2 = mu_alt_eps2(mode, alt, x);
    const double nu = nu_null(mode, ProximityParam::finite(x));
    return d2 * d2 / (4.0 * nu);
  };
  if (r > 1.0) return value_at(r);
  // r = 1: nu_and(1) = 0 makes the AND cases 0/0; evaluate the right limit on
  // a refinement grid with Richardson extrapolation, and return the infinity
  // sentinel when the values diverge instead of settling.
  const double v1 = value_at(1.0 + 1e-3);
  const double v2 = value_at(1.0 + 1e-4);
  if (!std::isfinite(v1) || !std::isfinite(v2) ||
      (std::abs(v2) > 4.0 * std::abs(v1) && std::abs(v2) > 1e6)) {
    return std::numeric_limits<double>::infinity();
  }
  // The limit behaves linearly in (r - 1) to first order.
  return v2 + (v2 - v1) / 9.0;
}

double asym_power(double mu0, double nu0, double mu_eps, double nu_eps,
                  double n, double alpha, Alternative direction) {
  if (!(nu0 > 0.0) || !(nu_eps > 0.0)) {
    throw DomainError("asymptotic power needs positive variances");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha not in (0,1)");
  if (!(n >= 1.0)) throw DomainError("n must be >= 1");
  // The rejection threshold of the standardized test lives on the 4*nu scale
  // of sqrt(n) * rho, so the mean shift is measured against 2 sqrt(nu_eps);
  // the variance ratio is scale-free.
  const double shift =
      std::sqrt(n) * (mu0 - mu_eps) / (2.0 * std::sqrt(nu_eps));
  const double ratio = std::sqrt(nu0) / std::sqrt(nu_eps);
  if (direction == Alternative::Segregation) {
    const double z = norm_quantile(1.0 - alpha);
    return 1.0 - norm_cdf(z * ratio + shift);
  }
  const double z = norm_quantile(alpha);
  return norm_cdf(z * ratio + shift);
}

namespace {
void check_weights(std::span<const double> w) {
  double sum = 0.0;
  for (double x : w) {
    if (!(x > 0.0)) throw DomainError("weights must be positive");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw DomainError("weights must sum to 1");
  }
}
}  // namespace

MomentPair multi_tri_moments_I(double mu, double nu,
                               std::span<const double> weights) {
  check_weights(weights);
  double w2 = 0.0, w3 = 0.0;
  for (double w : weights) {
    w2 += w * w;
    w3 += w * w * w;
  }
  return {mu * w2, nu * w3 + mu * mu * (w3 - w2 * w2)};
}

MomentPair multi_tri_moments_II(double mu, double nu,
                                std::span<const double> weights) {
  check_weights(weights);
  double w2 = 0.0, w3 = 0.0;
  for (double w : weights) {
    w2 += w * w;
    w3 += w * w * w;
  }
  return {mu, nu * w3 / (w2 * w2)};
}

bool clt_valid(EdgeMode mode, Alternative alt, double r, double eps) {
  const double s3 = std::sqrt(3.0);
  if (!(eps > 0.0 && eps < s3 / 3.0)) {
    throw DomainError("epsilon must lie in (0, sqrt(3)/3)");
  }
  if (r < 1.0) throw DomainError("r must satisfy r >= 1");
  if (alt == Alternative::Association) {
    if (r > 1.0) return true;
    // r == 1: only the OR case keeps a positive variance, on a small window.
    return mode == EdgeMode::Or && eps < s3 / 12.0;
  }
  // Segregation: the variance is positive below an eps-dependent cap on r;
  // the AND case additionally needs r > 1.
  if (mode == EdgeMode::And && r <= 1.0) return false;
  const double cap = eps <= s3 / 4.0 ? s3 / (2.0 * eps) : s3 / eps - 2.0;
  return r < cap;
}

}  // namespace pcdpe
