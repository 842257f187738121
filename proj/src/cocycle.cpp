#include "su21/cocycle.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "su21/errors.hpp"

namespace su21 {

namespace {

constexpr double kBallSlack = 1e-9;

EisensteinFraction frac(const Eisenstein& z) { return EisensteinFraction(z); }

}  // namespace

bool in_ball(const BallPoint& tau, double slack) {
  return 2.0 * tau.t1.real() + std::norm(tau.t2) < slack;
}

bool ExactBallPoint::in_ball() const { return 2 * t1.real() + norm(t2) < 0; }

ExactBallPoint default_base_point() { return {EisensteinFraction(-2), EisensteinFraction(0)}; }

std::vector<ExactBallPoint> fallback_base_points() {
  return {{EisensteinFraction(-3), EisensteinFraction(0)},
          {EisensteinFraction(-2), EisensteinFraction(Eisenstein(1), 2)}};
}

SigmaOptions SigmaOptions::defaults() {
  SigmaOptions o;
  o.base_points.push_back(default_base_point());
  for (auto& p : fallback_base_points()) o.base_points.push_back(p);
  return o;
}

std::complex<double> j_factor(const GroupMatrix& g, const BallPoint& tau) {
  return embed(g(2, 0)) * tau.t1 + embed(g(2, 1)) * tau.t2 + embed(g(2, 2));
}

EisensteinFraction j_factor(const GroupMatrix& g, const ExactBallPoint& tau) {
  return frac(g(2, 0)) * tau.t1 + frac(g(2, 1)) * tau.t2 + frac(g(2, 2));
}

BallPoint act(const GroupMatrix& g, const BallPoint& tau) {
  std::complex<double> j = j_factor(g, tau);
  BallPoint out{(embed(g(0, 0)) * tau.t1 + embed(g(0, 1)) * tau.t2 + embed(g(0, 2))) / j,
                (embed(g(1, 0)) * tau.t1 + embed(g(1, 1)) * tau.t2 + embed(g(1, 2))) / j};
  if (!in_ball(out, kBallSlack)) throw DomainError("g * tau left the ball (numerical failure)");
  return out;
}

ExactBallPoint act(const GroupMatrix& g, const ExactBallPoint& tau) {
  EisensteinFraction j = j_factor(g, tau);
  return {(frac(g(0, 0)) * tau.t1 + frac(g(0, 1)) * tau.t2 + frac(g(0, 2))) / j,
          (frac(g(1, 0)) * tau.t1 + frac(g(1, 1)) * tau.t2 + frac(g(1, 2))) / j};
}

Eisenstein x_of_exact(const GroupMatrix& g) {
  Eisenstein x = g(2, 0).is_zero() ? g(2, 2) : -g(2, 0);
  if (x.is_zero()) throw DomainError("X(g) = 0: matrix does not preserve the form");
  return x;
}

std::complex<double> x_of(const GroupMatrix& g) { return embed(x_of_exact(g)); }

std::complex<double> principal_log(std::complex<double> z) {
  double arg = std::atan2(z.imag(), z.real());
  if (arg <= -std::numbers::pi) arg = std::numbers::pi;
  return {std::log(std::abs(z)), arg};
}

std::complex<double> j_tilde(const GroupMatrix& g, const BallPoint& tau) {
  std::complex<double> x = x_of(g);
  return principal_log(j_factor(g, tau) / x) + principal_log(x);
}

namespace {

// j~ from an exact value of j(g, tau).
std::complex<double> j_tilde_from(const EisensteinFraction& j, const Eisenstein& x) {
  return principal_log(embed(j / frac(x))) + principal_log(embed(x));
}

}  // namespace

std::complex<double> j_tilde(const GroupMatrix& g, const ExactBallPoint& tau) {
  return j_tilde_from(j_factor(g, tau), x_of_exact(g));
}

SigmaEvaluation sigma_at(const GroupMatrix& g, const GroupMatrix& h,
                         const ExactBallPoint& tau) {
  GroupMatrix gh = g * h;
  EisensteinFraction j_gh = j_factor(gh, tau);
  EisensteinFraction j_h = j_factor(h, tau);
  // j(g, h tau) = j(gh, tau) / j(h, tau) exactly.
  EisensteinFraction j_g_htau = j_gh / j_h;
  std::complex<double> total = j_tilde_from(j_gh, x_of_exact(gh)) -
                               j_tilde_from(j_g_htau, x_of_exact(g)) -
                               j_tilde_from(j_h, x_of_exact(h));
  std::complex<double> q = total / std::complex<double>(0.0, 2.0 * std::numbers::pi);
  double rounded = std::round(q.real());
  return {static_cast<long>(rounded), std::abs(q - std::complex<double>(rounded, 0.0))};
}

long sigma(const GroupMatrix& g, const GroupMatrix& h, const SigmaOptions& options) {
  double worst = 0.0;
  for (const auto& tau : options.base_points) {
    SigmaEvaluation e = sigma_at(g, h, tau);
    if (e.residual < options.tolerance) return e.value;
    worst = std::max(worst, e.residual);
  }
  std::ostringstream os;
  os << "sigma residual " << worst << " exceeds tolerance " << options.tolerance
     << " at every base point";
  throw SigmaToleranceError(os.str());
}

CoverElement cover_mul(const CoverElement& x, const CoverElement& y,
                       const SigmaOptions& options) {
  return {x.g * y.g, x.n + y.n + sigma(x.g, y.g, options)};
}

CoverElement cover_inv(const CoverElement& x, const SigmaOptions& options) {
  GroupMatrix gi = inverse(x.g);
  return {gi, -x.n - sigma(x.g, gi, options)};
}

CoverElement cover_pow(const CoverElement& x, long k, const SigmaOptions& options) {
  CoverElement base = k < 0 ? cover_inv(x, options) : x;
  CoverElement acc;
  for (long i = 0; i < std::labs(k); ++i) acc = cover_mul(acc, base, options);
  return acc;
}

}  // namespace su21
