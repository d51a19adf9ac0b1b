#pragma once

#include <span>

#include "pcdpe/geometry.hpp"

namespace pcdpe {

enum class EdgeMode { And, Or };
enum class Alternative { Segregation, Association };

// Largest epsilon for which the closed-form alternative means are valid.
double alt_epsilon_limit(Alternative alt);

// Asymptotic null mean of the relative edge density, piecewise in r over
// [1,4/3), [4/3,3/2), [3/2,2), [2,inf); mu(inf) = 1.
double mu_null(EdgeMode mode, ProximityParam r);

// Var[h12] under the null; equals mu(1-mu) identically (Bernoulli kernel).
double var_h_null(EdgeMode mode, ProximityParam r);

// Cov[h12, h13] under the null, piecewise over eleven intervals; nu(inf) = 0.
double nu_null(EdgeMode mode, ProximityParam r);

// Joint pmf of the kernel pair (h12, h13) under the null.
struct JointPmf {
  double p00 = 0.0;
  double p01 = 0.0;
  double p10 = 0.0;
  double p11 = 0.0;
};
JointPmf joint_pmf(EdgeMode mode, ProximityParam r);

// Mean of the edge density under a segregation/association alternative with
// carve-out parameter eps.  Valid for eps in [0, sqrt(3)/8) under segregation
// and [0, (7 sqrt(3) - 3 sqrt(15))/12) under association.
double mu_alt(EdgeMode mode, Alternative alt, ProximityParam r, double eps);

// Second epsilon-derivative of mu_alt at eps = 0 (the first derivative
// vanishes identically), via Richardson-extrapolated central differences.
double mu_alt_eps2(EdgeMode mode, Alternative alt, double r);

// Pitman asymptotic efficiency (mu_eps''(r,0))^2 / (4 nu(r)).  At r = 1 the
// 0/0 cases are evaluated as right limits on a refinement grid; a divergent
// limit yields +infinity.
double pae(EdgeMode mode, Alternative alt, double r);

// Asymptotic power of the one-sided level-alpha test at sample size n, given
// null and alternative moments (the alternative variance has no closed form
// and is supplied by the caller, typically from Monte Carlo).
double asym_power(double mu0, double nu0, double mu_eps, double nu_eps,
                  double n, double alpha, Alternative direction);

// Moment adjustments for the multi-triangle density rho_I conditional on the
// mesh: mu~ = mu * sum(w^2), nu~ = nu * sum(w^3) + mu^2 (sum(w^3) - sum(w^2)^2).
struct MomentPair {
  double mu = 0.0;
  double nu = 0.0;
};
MomentPair multi_tri_moments_I(double mu, double nu,
                               std::span<const double> weights);

// Adjustments for rho_II: mu_breve = mu, nu_breve = nu sum(w^3)/sum(w^2)^2.
MomentPair multi_tri_moments_II(double mu, double nu,
                                std::span<const double> weights);

// Whether the CLT for the edge density holds at (r, eps) under the given
// alternative (positive limiting variance region).
bool clt_valid(EdgeMode mode, Alternative alt, double r, double eps);

}  // namespace pcdpe
