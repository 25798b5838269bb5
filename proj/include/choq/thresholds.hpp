#pragma once

#include <optional>
#include <string>
#include <vector>

#include "choq/params.hpp"
#include "choq/sharp_constants.hpp"

namespace choq {

enum class ThresholdName {
  c0,
  c_star,
  c_hat_star,
  c_tilde_star,
  gamma_star,
  mu_star,
  Gamma,
  Gamma_star,
  K_V,
  K_U,
  mass_crit_hartree,
  mass_crit_power,
};

std::string to_string(ThresholdName n);

struct ThresholdReport {
  ThresholdName name = ThresholdName::c_star;
  double value = 0.0;
  bool applicable = false;
  std::string window;            // human-readable hypothesis window
  double relative_uncertainty = 0.0;  // first-order propagation of the constants' method gaps
};

// Every closed-form constant of the theorem statements. All formulas are
// plain power laws in (gamma, mu, c, Sbar, ||Q_p||_2^{2p-2}); the *_report
// entry points evaluate them exactly as displayed and tag applicability.

// Mass threshold for the two-solution regimes (gamma, mu > 0):
double c_star(const ProblemParams& pp, const SharpConstants& sc);
ThresholdReport c_star_report(const ProblemParams& pp, const SharpConstants& sc);

// Prefactored Theorem-2(a) bounds (4/(N(q-2)))^... c* and ((Np-N-a)/2)^... c*.
double c_star_bound_i(const ProblemParams& pp, const SharpConstants& sc);
double c_star_bound_ii(const ProblemParams& pp, const SharpConstants& sc);

// gamma < 0 branch: |gamma| c^{(aq+2q-2a-4p)/((q-2)N-4)} < c_hat_star.
double c_hat_star(const ProblemParams& pp, const SharpConstants& sc);
ThresholdReport c_hat_star_report(const ProblemParams& pp, const SharpConstants& sc);

// mu < 0 branch: |mu| c^{(4p+2a-aq-2q)/(2(Np-N-a-2))} < c_tilde_star.
double c_tilde_star(const ProblemParams& pp, const SharpConstants& sc);
ThresholdReport c_tilde_star_report(const ProblemParams& pp, const SharpConstants& sc);

// Double-critical boundary mass: (2mu/q) Sbar c^{2/N} + gamma c^{(2+a)/N} / ||Q||^{2(a+2)/N} = 1.
double c_zero(const ProblemParams& pp, const SharpConstants& sc);
ThresholdReport c_zero_report(const ProblemParams& pp, const SharpConstants& sc);
double c_zero_lhs(const ProblemParams& pp, const SharpConstants& sc, double c);  // the increasing left side

// V / U machinery (Theorem 4(iii) and Theorem 6(b)):
double Gamma_V(const ProblemParams& pp, const SharpConstants& sc);
double K_V(const ProblemParams& pp, const SharpConstants& sc);
double Gamma_U(const ProblemParams& pp, const SharpConstants& sc);
double K_U(const ProblemParams& pp, const SharpConstants& sc);

// gamma_star needs the level beta of the pure-power problem (E_mu^infty);
// mu_star needs the level kappa of the pure-Choquard problem (E_gamma^infty).
double gamma_star(const ProblemParams& pp, const SharpConstants& sc, double beta_level);
double mu_star(const ProblemParams& pp, const SharpConstants& sc, double kappa_level);

// Boundary-energy barriers behind the constraint-exit rule of the V / U
// mountain passes.
double barrier_M_V(const ProblemParams& pp, const SharpConstants& sc);
double barrier_M_U(const ProblemParams& pp, const SharpConstants& sc);

// Mass-critical boundaries of Theorem 1(a)(ii)-(iii):
//   hartree: c < ||Q_{(N+a+2)/N}||_2^2 gamma^{-N/(a+2)},
//   power:   c < ((N+2)/(Sbar N))^{N/2} mu^{-N/2}.
double mass_crit_hartree(const ProblemParams& pp, const SharpConstants& sc);
double mass_crit_power(const ProblemParams& pp, const SharpConstants& sc);

std::vector<ThresholdReport> structural_constants(const ProblemParams& pp, const SharpConstants& sc,
                                                  std::optional<double> beta_level,
                                                  std::optional<double> kappa_level);
std::vector<ThresholdReport> mass_critical_bounds(const ProblemParams& pp, const SharpConstants& sc);

// Every report that applies to this tuple (used by the thresholds CLI).
std::vector<ThresholdReport> all_thresholds(const ProblemParams& pp, const SharpConstants& sc,
                                            std::optional<double> beta_level = std::nullopt,
                                            std::optional<double> kappa_level = std::nullopt);

// Lemma 3.4 bracket: the two A(u)-bounds whose coincidence defines c*.
double lemma34_lower_bound(const ProblemParams& pp, const SharpConstants& sc, double c);
double lemma34_upper_bound(const ProblemParams& pp, const SharpConstants& sc, double c);

// Local-minimization region radii: R = first positive root of
//   h(s) = s/2 - gamma c^{...}/(2||Qp||^{2p-2}) s^{(Np-N-a)/2} - mu Sbar c^{...}/q s^{N(q-2)/4},
// and r0 = (gamma R0 / Gamma_U)^{2/(Np-N-a)} from the B-ball analysis.
double region_radius_AR(const ProblemParams& pp, const SharpConstants& sc);
double region_radius_Ar0(const ProblemParams& pp, const SharpConstants& sc);
double h_of_s(const ProblemParams& pp, const SharpConstants& sc, double s);

// Diagonal Hardy-Littlewood-Sobolev constant (sharp, Lieb), including the
// Riesz normalization: B(u) <= C_tilde ||u||_{2Np/(N+alpha)}^{2p}.
double hls_constant(int N, double alpha);

}  // namespace choq
