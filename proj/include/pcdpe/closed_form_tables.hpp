#pragma once

namespace pcdpe::tables {

// Rational function of r with integer coefficients stored in doubles,
// ascending powers.
struct RationalPoly {
  const double* num;
  int num_len;
  const double* den;
  int den_len;
};

// Bivariate polynomial in (r, eps); coefficient of r^i eps^j is
// a[i*ne + j] + b[i*ne + j] * sqrt(3) (b may be null when no sqrt(3) part).
struct BivariatePoly {
  const double* a;
  const double* b;
  int nr;
  int ne;
};

struct BivariateRational {
  BivariatePoly num;
  BivariatePoly den;
};

// Null-mean / variance breakpoints 4/3, 3/2, 2 (four intervals from r = 1).
extern const double kMeanBreaks[3];
// Interior covariance breakpoints (eleven intervals from r = 1).
extern const double kNuBreaks[10];

extern const RationalPoly kMuAnd[4];
extern const RationalPoly kMuOr[4];
extern const RationalPoly kVarAnd[4];
extern const RationalPoly kVarOr[4];
extern const RationalPoly kNuAnd[11];
extern const RationalPoly kNuOr[11];

extern const BivariateRational kMuSegAnd[4];
extern const BivariateRational kMuSegOr[4];
extern const BivariateRational kMuAssocAnd[4];
extern const BivariateRational kMuAssocOr[4];

}  // namespace pcdpe::tables
