#pragma once

#include <vector>

namespace choq {

// 1-D radial solvers. These are the independent cross-check path for the two
// sharp constants: they share no code with the grid pipeline.

struct RadialProfile {
  std::vector<double> r;  // cell-centered radii
  std::vector<double> u;
  double A = 0.0;  // int |u'|^2 dV
  double B = 0.0;  // Hartree energy (Choquard solver only)
  double C = 0.0;  // int |u|^q dV (power solver only; exponent per call)
  double D = 0.0;  // int u^2 dV
  double residual = 0.0;
  int iterations = 0;
};

// Ground state of -Lap(w) + w = w^{q-1} in dimension N by shooting on w(0);
// the Weinstein maximizer behind the Gagliardo-Nirenberg constant.
RadialProfile power_ground_state(int N, double q);

// Ground state of Eq.
//   -(Np-N-alpha)/2 Lap(u) + (N+alpha-(N-2)p)/2 u = (I_alpha*|u|^p)|u|^{p-2}u
// by a normalization-stabilized fixed point on a radial mesh, with the Riesz
// potential evaluated by exact radial kernels. Supported kernels:
// (N=3, alpha=2) Newton shells and (N=2, alpha=1) elliptic integral.
RadialProfile choquard_ground_state_radial(int N, double alpha, double p, int mesh = 6000, double rmax = 30.0);

}  // namespace choq
