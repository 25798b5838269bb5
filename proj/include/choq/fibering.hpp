#pragma once

#include <vector>

#include "choq/functionals.hpp"

namespace choq {

// Fibering map along the mass-preserving dilation u_t = t^{N/2} u(tx):
//   g(t) = t^2/2 A - gamma t^{eB}/(2p) B - mu t^{eC}/q C,
// eB = Np-N-alpha, eC = N(q-2)/2. Everything here is closed-form in the
// scalar triple (A,B,C); fields never get resampled, so roots are exact up
// to scalar root-finding.
struct FiberingProfile {
  FunctionalSummary summary;
  ProblemParams params;
  double e_B = 0.0;
  double e_C = 0.0;
};

FiberingProfile fibering_profile(const FunctionalSummary& s, const ProblemParams& pp);
FiberingProfile fibering_profile(const Field& u, const ProblemParams& pp);

double g(const FiberingProfile& fp, double t);
double g1(const FiberingProfile& fp, double t);
double g2(const FiberingProfile& fp, double t);

enum class CriticalKind { LocalMin, LocalMax, Inflection };

struct CriticalPoint {
  double t = 0.0;
  CriticalKind kind = CriticalKind::Inflection;
  double g_value = 0.0;
  double g2_value = 0.0;
};

// All positive roots of g'(t) = 0 in ascending order. Sign-bracketing on a
// 256-point log grid over [1e-6, 1e6] refined by bisection; complete because
// g' has at most two sign changes for admissible exponent triples. A sign
// mismatch against the asymptotic behavior at a window edge raises a
// diagnostic instead of silently truncating.
std::vector<CriticalPoint> critical_points(const FiberingProfile& fp);

// Closed-form maximizer of m(t) in the two-root regime (gamma, mu > 0,
// one exponent subcritical and the other supercritical):
//   t_max = [2p(4-N(q-2)) A / (gamma (Np-N-alpha)(2Np-2alpha-qN) B)]^{1/(Np-(N+alpha+2))}
double t_max(const FiberingProfile& fp);

// Dilate u to the fibering root of the requested kind.
Field project_minus(const Field& u, const ProblemParams& pp);
Field project_plus(const Field& u, const ProblemParams& pp);

// f_beta(theta, u): the defect that controls the mass-scaling family
// u_theta = theta^{1-N beta/2} u(theta^{-beta} x), through
// E(u_theta) = theta^2 (E(u) + f_beta(theta, u)).
double beta_scaling_defect(const FunctionalSummary& s, const ProblemParams& pp, double beta, double theta);
double beta_scaling_defect(const Field& u, double beta, double theta, const ProblemParams& pp);

// Realizes u_theta on the grid (amplitude scale + metadata dilation).
Field beta_scale(const Field& u, double beta, double theta);

enum class Membership { MPlus, MMinus, MZero, OffManifold };

Membership membership(const Field& u, const ProblemParams& pp, double tol);
Membership membership(const FiberingProfile& fp, double tol);

}  // namespace choq
