#pragma once

// The ball H = { tau : 2 Re(tau1) + |tau2|^2 < 0 }, the automorphy factor
// j(g, tau), its logarithm branch, the integer cocycle sigma and arithmetic in
// the universal cover of SU(2,1).

#include <complex>
#include <vector>

#include "su21/eisenstein.hpp"
#include "su21/matgroup.hpp"

namespace su21 {

struct BallPoint {
  std::complex<double> t1;
  std::complex<double> t2;
};

// 2 Re(t1) + |t2|^2 < slack.
bool in_ball(const BallPoint& tau, double slack = 0.0);

// A point of H with coordinates in Q(zeta). Used wherever sigma is evaluated so
// that the automorphy factors are exact until the final logarithm.
struct ExactBallPoint {
  EisensteinFraction t1;
  EisensteinFraction t2;

  BallPoint approx() const { return {embed(t1), embed(t2)}; }
  bool in_ball() const;
};

// (-2, 0); the fallbacks are (-3, 0) and (-2, 1/2).
ExactBallPoint default_base_point();
std::vector<ExactBallPoint> fallback_base_points();

// j(g, tau) = C tau + D for the bottom row (C | D) of g.
std::complex<double> j_factor(const GroupMatrix& g, const BallPoint& tau);
EisensteinFraction j_factor(const GroupMatrix& g, const ExactBallPoint& tau);

// g * tau = (A tau + B) / (C tau + D). Throws DomainError if the image leaves
// H by more than 1e-9.
BallPoint act(const GroupMatrix& g, const BallPoint& tau);
ExactBallPoint act(const GroupMatrix& g, const ExactBallPoint& tau);

// Bottom row (a b c): -a if a != 0, else c. Throws DomainError if zero.
Eisenstein x_of_exact(const GroupMatrix& g);
std::complex<double> x_of(const GroupMatrix& g);

// Principal logarithm with -pi < Im <= pi; the cut maps to +pi.
std::complex<double> principal_log(std::complex<double> z);

// log(j / X) + log(X), both principal.
std::complex<double> j_tilde(const GroupMatrix& g, const BallPoint& tau);
std::complex<double> j_tilde(const GroupMatrix& g, const ExactBallPoint& tau);

struct SigmaOptions {
  double tolerance = 1e-6;
  // Tried in order; the first point whose residual is within tolerance wins.
  std::vector<ExactBallPoint> base_points;

  static SigmaOptions defaults();
};

struct SigmaEvaluation {
  long value = 0;
  double residual = 0.0;
};

// One evaluation of (j~(gh) - j~(g, h tau) - j~(h, tau)) / 2 pi i at tau,
// without tolerance check.
SigmaEvaluation sigma_at(const GroupMatrix& g, const GroupMatrix& h,
                         const ExactBallPoint& tau);

// Throws SigmaToleranceError when no base point rounds within tolerance.
long sigma(const GroupMatrix& g, const GroupMatrix& h,
           const SigmaOptions& options = SigmaOptions::defaults());

// (g, n) in the universal cover, multiplied by (g,n)(h,m) = (gh, n + m + sigma(g,h)).
struct CoverElement {
  GroupMatrix g = GroupMatrix::identity();
  mpz_class n = 0;

  friend bool operator==(const CoverElement&, const CoverElement&) = default;
};

CoverElement cover_mul(const CoverElement& x, const CoverElement& y,
                       const SigmaOptions& options = SigmaOptions::defaults());
// (g^-1, -n - sigma(g, g^-1))
CoverElement cover_inv(const CoverElement& x,
                       const SigmaOptions& options = SigmaOptions::defaults());
// Integer power, negative exponents allowed.
CoverElement cover_pow(const CoverElement& x, long k,
                       const SigmaOptions& options = SigmaOptions::defaults());

}  // namespace su21
