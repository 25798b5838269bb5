#include "choq/thresholds.hpp"

#include <cmath>
#include <functional>

#include "choq/errors.hpp"

namespace choq {

namespace {

struct Exps {
  double N, a, p, q;
  double eB;   // Np - N - alpha
  double eC2;  // N(q-2)
  Exps(const ProblemParams& pp)
      : N(pp.N), a(pp.alpha.value()), p(pp.p.value()), q(pp.q.value()),
        eB(N * p - N - a), eC2(N * (q - 2.0)) {}
};

// First-order uncertainty from the constants' method gaps, via numerical
// log-derivatives of the closed-form value.
double propagate(const std::function<double(const SharpConstants&)>& f, const SharpConstants& sc) {
  const double v = f(sc);
  if (!(v > 0.0) || !std::isfinite(v)) return 0.0;
  const double eps = 1e-6;
  SharpConstants s1 = sc;
  s1.gn_sbar *= 1.0 + eps;
  const double dS = std::abs(std::log(f(s1) / v)) / eps;
  SharpConstants s2 = sc;
  s2.qp_norm_power *= 1.0 + eps;
  s2.qp_mass *= 1.0 + eps;
  const double dQ = std::abs(std::log(f(s2) / v)) / eps;
  return dS * sc.gn_provenance.cross_check_gap + dQ * sc.qp_provenance.cross_check_gap;
}

ThresholdReport make_report(ThresholdName name, bool applicable, const std::string& window,
                            const std::function<double(const SharpConstants&)>& f, const SharpConstants& sc) {
  ThresholdReport r;
  r.name = name;
  r.applicable = applicable;
  r.window = window;
  if (applicable) {
    r.value = f(sc);
    r.relative_uncertainty = propagate(f, sc);
  }
  return r;
}

void need(bool cond, const std::string& what) {
  if (!cond) throw NotApplicable(what);
}

}  // namespace

std::string to_string(ThresholdName n) {
  switch (n) {
    case ThresholdName::c0: return "c0";
    case ThresholdName::c_star: return "c_star";
    case ThresholdName::c_hat_star: return "c_hat_star";
    case ThresholdName::c_tilde_star: return "c_tilde_star";
    case ThresholdName::gamma_star: return "gamma_star";
    case ThresholdName::mu_star: return "mu_star";
    case ThresholdName::Gamma: return "Gamma";
    case ThresholdName::Gamma_star: return "Gamma_star";
    case ThresholdName::K_V: return "K_V";
    case ThresholdName::K_U: return "K_U";
    case ThresholdName::mass_crit_hartree: return "mass_crit_hartree";
    case ThresholdName::mass_crit_power: return "mass_crit_power";
  }
  return "?";
}

double c_star(const ProblemParams& pp, const SharpConstants& sc) {
  const Exps e(pp);
  const double denom_exp = 4.0 * e.p + 2.0 * e.a - e.q * (2.0 + e.a);
  const double two_r = 2.0 * e.N * e.p - e.N * e.q - 2.0 * e.a;  // 2Np - Nq - 2alpha
  const double first = 4.0 * e.q * (e.eB - 2.0) / (pp.mu * e.N * sc.gn_sbar * (e.q - 2.0) * two_r);
  const double second = 2.0 * (4.0 - e.eC2) * sc.qp_norm_power / (pp.gamma * e.eB * two_r);
  return std::pow(first, 2.0 * (e.eB - 2.0) / denom_exp) * std::pow(second, (4.0 - e.eC2) / denom_exp);
}

ThresholdReport c_star_report(const ProblemParams& pp, const SharpConstants& sc) {
  const Exps e(pp);
  const bool regime_i = e.eB > 2.0 && e.eC2 < 4.0;
  const bool regime_ii = e.eB < 2.0 && e.eC2 > 4.0;
  const bool ok = pp.gamma > 0.0 && pp.mu > 0.0 && (regime_i || regime_ii);
  return make_report(ThresholdName::c_star, ok, "gamma,mu>0 and {p super, q sub} or {p sub, q super}",
                     [&](const SharpConstants& s) { return c_star(pp, s); }, sc);
}

double c_star_bound_i(const ProblemParams& pp, const SharpConstants& sc) {
  const Exps e(pp);
  const double denom_exp = 4.0 * e.p + 2.0 * e.a - e.q * (2.0 + e.a);
  return std::pow(4.0 / e.eC2, (e.eC2 - 4.0) / denom_exp) * c_star(pp, sc);
}

double c_star_bound_ii(const ProblemParams& pp, const SharpConstants& sc) {
  const Exps e(pp);
  const double denom_exp = 4.0 * e.p + 2.0 * e.a - e.q * (2.0 + e.a);
  return std::pow(e.eB / 2.0, 2.0 * (e.eB - 2.0) / denom_exp) * c_star(pp, sc);
}

double lemma34_lower_bound(const ProblemParams& pp, const SharpConstants& sc, double c) {
  const Exps e(pp);
  const double two_r = 2.0 * e.N * e.p - e.N * e.q - 2.0 * e.a;
  const double base =
      2.0 * (4.0 - e.eC2) * sc.qp_norm_power / (pp.gamma * e.eB * two_r) * std::pow(c, -(e.N + e.a - e.p * (e.N - 2.0)) / 2.0);
  return std::pow(base, 2.0 / (e.eB - 2.0));
}

double lemma34_upper_bound(const ProblemParams& pp, const SharpConstants& sc, double c) {
  const Exps e(pp);
  const double two_r = 2.0 * e.N * e.p - e.N * e.q - 2.0 * e.a;
  const double base = pp.mu * e.N * sc.gn_sbar * (e.q - 2.0) * two_r / (4.0 * e.q * (e.eB - 2.0)) *
                      std::pow(c, (2.0 * e.N - e.q * (e.N - 2.0)) / 4.0);
  return std::pow(base, 4.0 / (4.0 - e.eC2));
}

double c_hat_star(const ProblemParams& pp, const SharpConstants& sc) {
  const Exps e(pp);
  const double nq_a = e.N * e.q + e.a * e.q - 2.0 * e.N * e.p;  // Nq + alpha q - 2Np
  const double first = (2.0 * e.N - e.q * (e.N - 2.0)) * sc.qp_norm_power / nq_a;
  const double second = 2.0 * e.q / (pp.mu * e.N * sc.gn_sbar * (e.q - 2.0));
  return first * std::pow(second, 2.0 * (e.N + e.a + 2.0 - e.N * e.p) / (e.eC2 - 4.0));
}

ThresholdReport c_hat_star_report(const ProblemParams& pp, const SharpConstants& sc) {
  const Exps e(pp);
  const bool ok = pp.gamma < 0.0 && pp.mu > 0.0 && e.eB <= 2.0 && e.eC2 > 4.0;
  return make_report(ThresholdName::c_hat_star, ok, "gamma<0, mu>0, p <= l2-critical, q super",
                     [&](const SharpConstants& s) { return c_hat_star(pp, s); }, sc);
}

double c_tilde_star(const ProblemParams& pp, const SharpConstants& sc) {
  const Exps e(pp);
  const double two_aq = 2.0 * e.N * e.p - e.N * e.q - e.a * e.q;  // 2Np - Nq - alpha q
  const double first = e.q * (e.N + e.a - (e.N - 2.0) * e.p) / (sc.gn_sbar * two_aq);
  const double second = 2.0 * sc.qp_norm_power / (pp.gamma * e.eB);
  return first * std::pow(second, (4.0 - e.eC2) / (2.0 * (e.eB - 2.0)));
}

ThresholdReport c_tilde_star_report(const ProblemParams& pp, const SharpConstants& sc) {
  const Exps e(pp);
  const double two_aq = 2.0 * e.N * e.p - e.N * e.q - e.a * e.q;
  const bool ok = pp.gamma > 0.0 && pp.mu < 0.0 && e.eB > 2.0 && e.eC2 <= 4.0 && two_aq > 0.0;
  return make_report(ThresholdName::c_tilde_star, ok, "gamma>0, mu<0, p super, q <= l2-critical, 2Np-Nq-aq>0",
                     [&](const SharpConstants& s) { return c_tilde_star(pp, s); }, sc);
}

double c_zero_lhs(const ProblemParams& pp, const SharpConstants& sc, double c) {
  const Exps e(pp);
  return 2.0 * pp.mu / e.q * sc.gn_sbar * std::pow(c, 2.0 / e.N) +
         pp.gamma * std::pow(c, (2.0 + e.a) / e.N) * std::pow(sc.qp_mass, -(e.a + 2.0) / e.N);
}

double c_zero(const ProblemParams& pp, const SharpConstants& sc) {
  need(pp.gamma > 0.0 && pp.mu > 0.0, "c0 needs gamma, mu > 0");
  // the left side is strictly increasing in c with range (0, inf): bisect = 1
  double lo = 1e-12, hi = 1.0;
  while (c_zero_lhs(pp, sc, hi) < 1.0) {
    hi *= 2.0;
    if (hi > 1e30) throw NoConvergence("c0 bracket", 0, hi);
  }
  while (c_zero_lhs(pp, sc, lo) > 1.0) lo *= 0.5;
  for (int it = 0; it < 400; ++it) {
    const double mid = std::sqrt(lo * hi);
    (c_zero_lhs(pp, sc, mid) > 1.0 ? hi : lo) = mid;
    if (hi - lo <= 1e-13 * hi) break;
  }
  return 0.5 * (lo + hi);
}

ThresholdReport c_zero_report(const ProblemParams& pp, const SharpConstants& sc) {
  const ExponentProfile ep = exponent_profile(pp);
  const bool ok = pp.gamma > 0.0 && pp.mu > 0.0 && ep.regime_p == Regime::Critical && ep.regime_q == Regime::Critical;
  return make_report(ThresholdName::c0, ok, "gamma,mu>0, p and q both l2-critical",
                     [&](const SharpConstants& s) { return c_zero(pp, s); }, sc);
}

double Gamma_V(const ProblemParams& pp, const SharpConstants& sc) {
  const Exps e(pp);
  const double two_r = 2.0 * e.N * e.p - e.N * e.q - 2.0 * e.a;
  need(two_r > 0.0 && e.eB > 2.0 && e.eC2 > 4.0, "Gamma needs p,q super with 2Np-Nq-2a>0");
  const double inner = std::abs(pp.gamma) * two_r * e.eB * std::pow(pp.c, (e.N + e.a - e.p * (e.N - 2.0)) / 2.0) /
                       (2.0 * sc.qp_norm_power * (e.eC2 - 4.0));
  return e.q * (e.eB - 2.0) / two_r * std::pow(inner, (e.eC2 - 4.0) / (2.0 * (e.eB - 2.0)));
}

double K_V(const ProblemParams& pp, const SharpConstants& sc) {
  const Exps e(pp);
  const double two_r = 2.0 * e.N * e.p - e.N * e.q - 2.0 * e.a;
  need(two_r > 0.0 && e.eB > 2.0 && e.eC2 > 4.0, "K_V needs p,q super with 2Np-Nq-2a>0");
  const double inner = 2.0 * sc.qp_norm_power * (e.eC2 - 4.0) /
                       (std::abs(pp.gamma) * two_r * e.eB * std::pow(pp.c, (e.N + e.a - e.p * (e.N - 2.0)) / 2.0));
  return std::pow(4.0 / e.eC2, 4.0 / (e.eC2 - 4.0)) * std::pow(inner, 2.0 / (e.eB - 2.0));
}

double gamma_star(const ProblemParams& pp, const SharpConstants& sc, double beta_level) {
  const Exps e(pp);
  const double two_r = 2.0 * e.N * e.p - e.N * e.q - 2.0 * e.a;
  need(two_r > 0.0 && e.eB > 2.0 && e.eC2 > 4.0, "gamma_star needs p,q super with 2Np-Nq-2a>0");
  need(beta_level > 0.0, "gamma_star needs the auxiliary level beta > 0");
  const double f1 = std::sqrt((e.eC2 - 4.0) / (2.0 * e.N * beta_level * (e.q - 2.0)));
  const double f2 = std::pow(2.0 * two_r / (e.N * (e.eB - 2.0) * (e.q - 2.0)), 2.0 / (e.eC2 - 4.0));
  const double tail = 2.0 * (e.eC2 - 4.0) * sc.qp_norm_power /
                      (e.eB * two_r * std::pow(pp.c, (e.N + e.a - e.p * (e.N - 2.0)) / 2.0));
  return std::pow(f1 * f2, e.eB - 2.0) * tail;
}

double barrier_M_V(const ProblemParams& pp, const SharpConstants& sc) {
  const Exps e(pp);
  const double G = Gamma_V(pp, sc);
  return (e.eB - 2.0) * (e.eC2 - 4.0) / (2.0 * e.N * e.eB * (e.q - 2.0)) *
         std::pow(2.0 * e.q / (e.N * G * (e.q - 2.0)), 4.0 / (e.eC2 - 4.0));
}

double Gamma_U(const ProblemParams& pp, const SharpConstants& sc) {
  const Exps e(pp);
  const double nq2a = e.N * e.q + 2.0 * e.a - 2.0 * e.N * e.p;  // Nq + 2alpha - 2Np
  need(nq2a > 0.0 && e.eB > 2.0 && e.eC2 > 4.0, "Gamma_star needs p,q super with 2Np-Nq-2a<0");
  const double inner = std::abs(pp.mu) * e.N * nq2a * (e.q - 2.0) * sc.gn_sbar *
                       std::pow(pp.c, (2.0 * e.N - e.q * (e.N - 2.0)) / 4.0) / (4.0 * e.q * (e.eB - 2.0));
  return e.p * (e.eC2 - 4.0) / nq2a * std::pow(inner, 2.0 * (e.eB - 2.0) / (e.eC2 - 4.0));
}

double K_U(const ProblemParams& pp, const SharpConstants& sc) {
  const Exps e(pp);
  const double nq2a = e.N * e.q + 2.0 * e.a - 2.0 * e.N * e.p;
  need(nq2a > 0.0 && e.eB > 2.0 && e.eC2 > 4.0, "K_U needs p,q super with 2Np-Nq-2a<0");
  const double inner = 4.0 * e.q * (e.eB - 2.0) /
                       (std::abs(pp.mu) * e.N * nq2a * (e.q - 2.0) * sc.gn_sbar *
                        std::pow(pp.c, (2.0 * e.N - e.q * (e.N - 2.0)) / 4.0));
  return std::pow(2.0 / e.eB, 2.0 / (e.eB - 2.0)) * std::pow(inner, 4.0 / (e.eC2 - 4.0));
}

double mu_star(const ProblemParams& pp, const SharpConstants& sc, double kappa_level) {
  const Exps e(pp);
  const double nq2a = e.N * e.q + 2.0 * e.a - 2.0 * e.N * e.p;
  need(nq2a > 0.0 && e.eB > 2.0 && e.eC2 > 4.0, "mu_star needs p,q super with 2Np-Nq-2a<0");
  need(kappa_level > 0.0, "mu_star needs the auxiliary level kappa > 0");
  const double f1 = std::sqrt((e.eB - 2.0) / (2.0 * kappa_level * e.eB));
  const double f2 = std::pow(2.0 * nq2a / ((e.eC2 - 4.0) * e.eB), 1.0 / (e.eB - 2.0));
  const double tail = 4.0 * e.q * (e.eB - 2.0) /
                      (e.N * (e.q - 2.0) * nq2a * sc.gn_sbar * std::pow(pp.c, (2.0 * e.N - e.q * (e.N - 2.0)) / 4.0));
  return std::pow(f1 * f2, (e.eC2 - 4.0) / 2.0) * tail;
}

double barrier_M_U(const ProblemParams& pp, const SharpConstants& sc) {
  const Exps e(pp);
  const double G = Gamma_U(pp, sc);
  return (e.eB - 2.0) * (e.eC2 - 4.0) / (2.0 * e.N * e.eB * (e.q - 2.0)) *
         std::pow(2.0 * e.p / (G * e.eB), 2.0 / (e.eB - 2.0));
}

double mass_crit_hartree(const ProblemParams& pp, const SharpConstants& sc) {
  const Exps e(pp);
  return sc.qp_mass * std::pow(pp.gamma, -e.N / (e.a + 2.0));
}

double mass_crit_power(const ProblemParams& pp, const SharpConstants& sc) {
  const Exps e(pp);
  return std::pow((e.N + 2.0) / (sc.gn_sbar * e.N), e.N / 2.0) * std::pow(pp.mu, -e.N / 2.0);
}

std::vector<ThresholdReport> mass_critical_bounds(const ProblemParams& pp, const SharpConstants& sc) {
  const ExponentProfile ep = exponent_profile(pp);
  std::vector<ThresholdReport> out;
  out.push_back(make_report(ThresholdName::mass_crit_hartree, ep.regime_p == Regime::Critical && pp.gamma > 0.0,
                            "p l2-critical, gamma>0",
                            [&](const SharpConstants& s) { return mass_crit_hartree(pp, s); }, sc));
  out.push_back(make_report(ThresholdName::mass_crit_power, ep.regime_q == Regime::Critical && pp.mu > 0.0,
                            "q l2-critical, mu>0",
                            [&](const SharpConstants& s) { return mass_crit_power(pp, s); }, sc));
  return out;
}

std::vector<ThresholdReport> structural_constants(const ProblemParams& pp, const SharpConstants& sc,
                                                  std::optional<double> beta_level,
                                                  std::optional<double> kappa_level) {
  const Exps e(pp);
  const double two_r = 2.0 * e.N * e.p - e.N * e.q - 2.0 * e.a;
  const bool v_window = pp.gamma < 0.0 && pp.mu > 0.0 && e.eB > 2.0 && e.eC2 > 4.0 && two_r > 0.0;
  const bool u_window = pp.gamma > 0.0 && pp.mu < 0.0 && e.eB > 2.0 && e.eC2 > 4.0 && two_r < 0.0;

  std::vector<ThresholdReport> out;
  out.push_back(make_report(ThresholdName::Gamma, v_window, "Theorem-4(iii) window",
                            [&](const SharpConstants& s) { return Gamma_V(pp, s); }, sc));
  out.push_back(make_report(ThresholdName::K_V, v_window, "Theorem-4(iii) window",
                            [&](const SharpConstants& s) { return K_V(pp, s); }, sc));
  {
    ThresholdReport r;
    r.name = ThresholdName::gamma_star;
    r.window = v_window && !beta_level ? "Theorem-4(iii) window; auxiliary level beta missing (run the pure-power problem)"
                                       : "Theorem-4(iii) window + auxiliary level beta";
    r.applicable = v_window && beta_level.has_value();
    if (r.applicable) {
      r.value = gamma_star(pp, sc, *beta_level);
      r.relative_uncertainty = propagate([&](const SharpConstants& s) { return gamma_star(pp, s, *beta_level); }, sc);
    }
    out.push_back(r);
  }
  out.push_back(make_report(ThresholdName::Gamma_star, u_window, "Theorem-6(b) window",
                            [&](const SharpConstants& s) { return Gamma_U(pp, s); }, sc));
  out.push_back(make_report(ThresholdName::K_U, u_window, "Theorem-6(b) window",
                            [&](const SharpConstants& s) { return K_U(pp, s); }, sc));
  {
    ThresholdReport r;
    r.name = ThresholdName::mu_star;
    r.window = u_window && !kappa_level ? "Theorem-6(b) window; auxiliary level kappa missing (run the pure-Choquard problem)"
                                        : "Theorem-6(b) window + auxiliary level kappa";
    r.applicable = u_window && kappa_level.has_value();
    if (r.applicable) {
      r.value = mu_star(pp, sc, *kappa_level);
      r.relative_uncertainty = propagate([&](const SharpConstants& s) { return mu_star(pp, s, *kappa_level); }, sc);
    }
    out.push_back(r);
  }
  return out;
}

std::vector<ThresholdReport> all_thresholds(const ProblemParams& pp, const SharpConstants& sc,
                                            std::optional<double> beta_level, std::optional<double> kappa_level) {
  std::vector<ThresholdReport> out;
  out.push_back(c_star_report(pp, sc));
  out.push_back(c_hat_star_report(pp, sc));
  out.push_back(c_tilde_star_report(pp, sc));
  out.push_back(c_zero_report(pp, sc));
  for (auto& r : mass_critical_bounds(pp, sc)) out.push_back(r);
  for (auto& r : structural_constants(pp, sc, beta_level, kappa_level)) out.push_back(r);
  return out;
}

double h_of_s(const ProblemParams& pp, const SharpConstants& sc, double s) {
  const Exps e(pp);
  return 0.5 * s -
         pp.gamma * std::pow(pp.c, (e.N + e.a - e.p * (e.N - 2.0)) / 2.0) / (2.0 * sc.qp_norm_power) *
             std::pow(s, e.eB / 2.0) -
         pp.mu * sc.gn_sbar * std::pow(pp.c, (2.0 * e.N - e.q * (e.N - 2.0)) / 4.0) / e.q * std::pow(s, e.eC2 / 4.0);
}

double region_radius_AR(const ProblemParams& pp, const SharpConstants& sc) {
  // first positive root of h: scan, bracket the sign change from - to +
  double prev_s = 1e-10, prev = h_of_s(pp, sc, prev_s);
  for (int i = 1; i <= 2400; ++i) {
    const double s = 1e-10 * std::pow(10.0, i * (16.0 / 2400.0) * 1.25);  // up to 1e10
    const double v = h_of_s(pp, sc, s);
    if ((prev < 0.0 && v >= 0.0) || (prev > 0.0 && v <= 0.0)) {
      double lo = prev_s, hi = s, flo = prev;
      for (int it = 0; it < 200; ++it) {
        const double mid = std::sqrt(lo * hi);
        const double fm = h_of_s(pp, sc, mid);
        if ((flo < 0.0) == (fm < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
        if (hi - lo <= 1e-13 * hi) break;
      }
      return 0.5 * (lo + hi);
    }
    prev = v;
    prev_s = s;
  }
  throw NotApplicable("region_radius_AR: h has no positive root in the scan range");
}

double hls_constant(int N, double alpha) {
  // Sharp diagonal HLS (exponent 2N/(N+alpha)) times the Riesz normalization:
  // C = A(N,alpha) pi^{(N-alpha)/2} Gamma(alpha/2)/Gamma((N+alpha)/2)
  //     (Gamma(N/2)/Gamma(N))^{-alpha/N}
  const double lg = std::lgamma(alpha / 2.0) - std::lgamma((N + alpha) / 2.0) -
                    (alpha / N) * (std::lgamma(N / 2.0) - std::lgamma(static_cast<double>(N)));
  return riesz_normalization(N, alpha) * std::pow(M_PI, (N - alpha) / 2.0) * std::exp(lg);
}

double region_radius_Ar0(const ProblemParams& pp, const SharpConstants& sc) {
  const Exps e(pp);
  const double nq2a = e.N * e.q + 2.0 * e.a - 2.0 * e.N * e.p;
  need(pp.gamma > 0.0 && pp.mu < 0.0 && nq2a > 0.0, "A_r0 needs the Theorem-6(b) window");
  const double Ct = hls_constant(pp.N, e.a);
  const double eb = e.eB;  // Np - N - alpha
  const double R0 = std::pow(pp.gamma * e.q / (2.0 * e.p * std::abs(pp.mu)) *
                                 std::pow(Ct, e.eC2 / (2.0 * eb)) *
                                 std::pow(pp.c, -(2.0 * e.N * e.p - e.q * (e.N + e.a)) / (2.0 * eb)),
                             2.0 * eb / nq2a);
  return std::pow(pp.gamma * R0 / Gamma_U(pp, sc), 2.0 / eb);
}

}  // namespace choq
