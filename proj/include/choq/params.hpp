#pragma once

#include <optional>
#include <string>

#include "choq/rational.hpp"

namespace choq {

// Admissibility windows, from the stationary problem
//   -Laplace(u) + lambda u = gamma (I_alpha * |u|^p)|u|^{p-2}u + mu |u|^{q-2}u,
//   integral |u|^2 = c:
//   N in {2,3}, 0 < alpha < N, (N+alpha)/N < p < 2*_alpha, 2 < q < 2*, c > 0.
// p, q, alpha may carry exact rationals so that the critical-exponent
// comparisons below are decided exactly.
struct ProblemParams {
  int N = 3;
  Exact alpha{2.0};
  Exact p{2.0};
  Exact q{3.0};
  double gamma = 1.0;
  double mu = 1.0;
  double c = 1.0;
};

enum class Regime { Sub, Critical, Super, NearCritical };

// The exponent landscape for one parameter tuple. l2_* are the mass-critical
// exponents; sobolev / hartree_upper are +inf when N = 2.
struct ExponentProfile {
  double l2_power = 0.0;      // 2 + 4/N
  double l2_hartree = 0.0;    // (N+alpha+2)/N
  double sobolev = 0.0;       // 2N/(N-2), +inf for N=2
  double hartree_upper = 0.0; // (N+alpha)/(N-2), +inf for N=2
  double hartree_lower = 0.0; // (N+alpha)/N
  Regime regime_p = Regime::Sub;
  Regime regime_q = Regime::Sub;
};

// Raw (unchecked) record as it arrives from a config file.
struct RawParams {
  int N = 3;
  Exact alpha{2.0};
  Exact p{2.0};
  Exact q{3.0};
  double gamma = 1.0;
  double mu = 1.0;
  double c = 1.0;
};

// Enforces the admissibility windows; throws OutOfWindow / NonfiniteInput.
ProblemParams validate(const RawParams& raw);

ExponentProfile exponent_profile(const ProblemParams& params);

// A(N,alpha) = Gamma((N-alpha)/2) / (pi^{N/2} 2^alpha Gamma(alpha/2)).
double riesz_normalization(int N, double alpha);

// Exact-where-possible comparison helpers used by regime classification.
Exact l2_hartree_exponent(const ProblemParams& pp);  // (N+alpha+2)/N
Exact l2_power_exponent(const ProblemParams& pp);    // 2+4/N

}  // namespace choq
