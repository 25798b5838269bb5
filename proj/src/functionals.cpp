#include "choq/functionals.hpp"

#include <cmath>

#include "choq/kernels.hpp"
#include "choq/spectral.hpp"

namespace choq {

FunctionalSummary summary(const Field& u, const ProblemParams& pp) {
  u.require_finite();
  const double hN = u.grid.cell_volume();
  const double p = pp.p.value(), q = pp.q.value();

  FunctionalSummary s;
  s.A = gradient_energy(u);
  s.D = hN * kernels::dot(u.values, u.values);
  s.C = hN * kernels::pow_sum(u.values, q);

  std::vector<double> rho(u.size());
  kernels::abs_pow(u.values, p, rho);
  Field conv = riesz_convolve(Field(u.grid, rho), pp.alpha.value());
  s.B = hN * kernels::dot(conv.values, rho);
  return s;
}

double energy(const FunctionalSummary& s, const ProblemParams& pp) {
  return 0.5 * s.A - pp.gamma / (2.0 * pp.p.value()) * s.B - pp.mu / pp.q.value() * s.C;
}

double energy(const Field& u, const ProblemParams& pp) { return energy(summary(u, pp), pp); }

double pohozaev(const FunctionalSummary& s, const ProblemParams& pp) {
  const double N = pp.N, a = pp.alpha.value(), p = pp.p.value(), q = pp.q.value();
  return s.A - pp.gamma * (N * p - N - a) / (2.0 * p) * s.B - pp.mu * N * (q - 2.0) / (2.0 * q) * s.C;
}

double pohozaev(const Field& u, const ProblemParams& pp) { return pohozaev(summary(u, pp), pp); }

double pohozaev_scale(const FunctionalSummary& s, const ProblemParams& pp) {
  const double N = pp.N, a = pp.alpha.value(), p = pp.p.value(), q = pp.q.value();
  return s.A + std::abs(pp.gamma) * (N * p - N - a) / (2.0 * p) * s.B +
         std::abs(pp.mu) * N * (q - 2.0) / (2.0 * q) * s.C;
}

double pohozaev_identity_residual(const FunctionalSummary& s, double lambda, const ProblemParams& pp) {
  const double N = pp.N, a = pp.alpha.value(), p = pp.p.value(), q = pp.q.value();
  const double t1 = (N - 2.0) / 2.0 * s.A;
  const double t2 = lambda * N / 2.0 * s.D;
  const double t3 = pp.gamma * (N + a) / (2.0 * p) * s.B;
  const double t4 = pp.mu * N / q * s.C;
  const double scale = std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(t4);
  if (scale == 0.0) return 0.0;
  return std::abs(t1 + t2 - t3 - t4) / scale;
}

double pohozaev_identity_residual(const Field& u, double lambda, const ProblemParams& pp) {
  return pohozaev_identity_residual(summary(u, pp), lambda, pp);
}

Field gradient(const Field& u, const ProblemParams& pp) {
  u.require_finite();
  const double p = pp.p.value(), q = pp.q.value();

  Field out = neg_laplacian(u);

  // Hartree term: (I_alpha * |u|^p) |u|^{p-2} u
  std::vector<double> rho(u.size());
  kernels::abs_pow(u.values, p, rho);
  Field conv = riesz_convolve(Field(u.grid, std::move(rho)), pp.alpha.value());
  std::vector<double> upow(u.size());
  kernels::signed_pow(u.values, p, upow);  // |u|^{p-2} u
  std::vector<double> hart(u.size());
  kernels::multiply(conv.values, upow, hart);
  kernels::axpy(-pp.gamma, hart, out.values);

  kernels::signed_pow(u.values, q, upow);
  kernels::axpy(-pp.mu, upow, out.values);
  return out;
}

double lagrange_multiplier(const FunctionalSummary& s, const ProblemParams& pp) {
  if (!(s.D > 0.0)) throw ZeroMass();
  return (pp.gamma * s.B + pp.mu * s.C - s.A) / s.D;
}

double lagrange_multiplier(const Field& u, const ProblemParams& pp) {
  return lagrange_multiplier(summary(u, pp), pp);
}

Field projected_gradient(const Field& u, const ProblemParams& pp) {
  const double lambda = lagrange_multiplier(u, pp);
  Field g = gradient(u, pp);
  kernels::axpy(lambda, u.values, g.values);
  return g;
}

double l2_norm(const Field& f) { return std::sqrt(f.grid.cell_volume() * kernels::dot(f.values, f.values)); }

double inner(const Field& a, const Field& b) { return a.grid.cell_volume() * kernels::dot(a.values, b.values); }

SolutionDiagnostics diagnostics(const Field& u, const ProblemParams& pp) {
  SolutionDiagnostics d;
  d.summary = summary(u, pp);
  d.energy = energy(d.summary, pp);
  const double scale = pohozaev_scale(d.summary, pp);
  d.pohozaev_residual = scale > 0.0 ? std::abs(pohozaev(d.summary, pp)) / scale : 0.0;
  d.lambda = lagrange_multiplier(d.summary, pp);
  Field g = gradient(u, pp);
  kernels::axpy(d.lambda, u.values, g.values);
  d.grad_norm = l2_norm(g);
  return d;
}

}  // namespace choq
