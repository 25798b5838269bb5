#pragma once

#include "choq/field.hpp"
#include "choq/params.hpp"

namespace choq {

// The scalar quadruple behind every identity in the problem:
//   A = int |grad u|^2, B = int (I_alpha*|u|^p)|u|^p, C = int |u|^q, D = int u^2.
struct FunctionalSummary {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double D = 0.0;
};

struct SolutionDiagnostics {
  double energy = 0.0;
  double pohozaev_residual = 0.0;
  double lambda = 0.0;
  double grad_norm = 0.0;
  FunctionalSummary summary;
};

FunctionalSummary summary(const Field& u, const ProblemParams& pp);

// E = A/2 - gamma B/(2p) - mu C/q
double energy(const FunctionalSummary& s, const ProblemParams& pp);
double energy(const Field& u, const ProblemParams& pp);

// Q = A - gamma (Np-N-alpha)/(2p) B - mu N(q-2)/(2q) C
double pohozaev(const FunctionalSummary& s, const ProblemParams& pp);
double pohozaev(const Field& u, const ProblemParams& pp);

// |Q| normalized by the sum of absolute terms, so tolerances are scale-free.
double pohozaev_scale(const FunctionalSummary& s, const ProblemParams& pp);

// |(N-2)/2 A + lambda N/2 D - gamma (N+alpha)/(2p) B - mu N/q C| / (sum |terms|)
double pohozaev_identity_residual(const Field& u, double lambda, const ProblemParams& pp);
double pohozaev_identity_residual(const FunctionalSummary& s, double lambda, const ProblemParams& pp);

// Unconstrained L2 gradient: -Lap u - gamma (I_alpha*|u|^p)|u|^{p-2}u - mu |u|^{q-2}u.
Field gradient(const Field& u, const ProblemParams& pp);

// lambda = (gamma B + mu C - A) / D
double lagrange_multiplier(const FunctionalSummary& s, const ProblemParams& pp);
double lagrange_multiplier(const Field& u, const ProblemParams& pp);

// gradient(u) + lambda(u) u; L2-orthogonal to u by construction.
Field projected_gradient(const Field& u, const ProblemParams& pp);

double l2_norm(const Field& f);
double inner(const Field& a, const Field& b);

SolutionDiagnostics diagnostics(const Field& u, const ProblemParams& pp);

}  // namespace choq
