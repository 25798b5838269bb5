#pragma once

#include <optional>
#include <string>

#include "choq/field.hpp"
#include "choq/params.hpp"

namespace choq {

// Provenance travels with every constant so threshold verdicts can report
// how precise their inputs are.
struct ConstantProvenance {
  std::string method;
  double residual = 0.0;
  double cross_check_gap = 0.0;  // relative gap between the two methods
  int grid_points = 0;
  double box_length = 0.0;
};

struct SharpConstants {
  double gn_sbar = 0.0;       // sharp Gagliardo-Nirenberg constant S(N,q)
  double qp_mass = 0.0;       // ||Q_p||_2^2
  double qp_norm_power = 0.0; // ||Q_p||_2^{2p-2}
  std::optional<Field> qp_field;
  ConstantProvenance gn_provenance;
  ConstantProvenance qp_provenance;
};

struct ConstantsOptions {
  int points = 64;
  double box = 0.0;          // 0: pick a default per dimension
  std::string cache_path;    // empty: no disk cache
  bool keep_field = true;    // retain the computed Q_p samples
};

// Sharp GN constant: Sobolev-preconditioned gradient ascent of the Weinstein
// quotient C/(A^{N(q-2)/4} D^{(2N-q(N-2))/4}) on the grid, cross-checked
// against a radial shooting solve of -Lap w + w = w^{q-1}; the two must agree
// within 0.5% and the finer (radial) value is returned.
double gn_constant(int N, double q, const ConstantsOptions& opts, ConstantProvenance* prov = nullptr);

// Ground state of the rescaled Choquard equation by normalization-stabilized
// fixed point (Petviashvili exponent (2p-1)/(2p-2)) with the free-space
// Hartree term; cross-checked against the radial integral-equation solve
// where that kernel exists ((3,2) and (2,1)).
SharpConstants choquard_ground_state(int N, double alpha, double p, const ConstantsOptions& opts);

// Full snapshot for one parameter tuple: S(N,q) plus the Q_p data for its p.
SharpConstants compute_sharp_constants(const ProblemParams& pp, const ConstantsOptions& opts);

// Weinstein quotient of a trial field (exposed for the supremum tests).
double weinstein_quotient(const Field& u, double q);

}  // namespace choq
