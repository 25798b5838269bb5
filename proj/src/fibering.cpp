#include "choq/fibering.hpp"

#include <algorithm>
#include <cmath>

namespace choq {

namespace {
constexpr double kScanLo = 1e-6;
constexpr double kScanHi = 1e6;
constexpr int kScanPoints = 256;

// |g''| scale for the inflection tolerance: sum of term magnitudes.
double g2_scale(const FiberingProfile& fp, double t) {
  const auto& s = fp.summary;
  const auto& pp = fp.params;
  const double p = pp.p.value(), q = pp.q.value();
  return std::abs(s.A) +
         std::abs(pp.gamma) * std::abs(fp.e_B * (fp.e_B - 1.0)) / (2.0 * p) * s.B * std::pow(t, fp.e_B - 2.0) +
         std::abs(pp.mu) * std::abs(fp.e_C * (fp.e_C - 1.0)) / q * s.C * std::pow(t, fp.e_C - 2.0);
}
}  // namespace

FiberingProfile fibering_profile(const FunctionalSummary& s, const ProblemParams& pp) {
  FiberingProfile fp;
  fp.summary = s;
  fp.params = pp;
  const double N = pp.N;
  fp.e_B = N * pp.p.value() - N - pp.alpha.value();
  fp.e_C = N * (pp.q.value() - 2.0) / 2.0;
  return fp;
}

FiberingProfile fibering_profile(const Field& u, const ProblemParams& pp) {
  return fibering_profile(summary(u, pp), pp);
}

double g(const FiberingProfile& fp, double t) {
  if (!(t > 0.0)) throw NonpositiveT();
  const auto& s = fp.summary;
  const auto& pp = fp.params;
  return 0.5 * t * t * s.A - pp.gamma / (2.0 * pp.p.value()) * std::pow(t, fp.e_B) * s.B -
         pp.mu / pp.q.value() * std::pow(t, fp.e_C) * s.C;
}

double g1(const FiberingProfile& fp, double t) {
  if (!(t > 0.0)) throw NonpositiveT();
  const auto& s = fp.summary;
  const auto& pp = fp.params;
  return t * s.A - pp.gamma * fp.e_B / (2.0 * pp.p.value()) * std::pow(t, fp.e_B - 1.0) * s.B -
         pp.mu * fp.e_C / pp.q.value() * std::pow(t, fp.e_C - 1.0) * s.C;
}

double g2(const FiberingProfile& fp, double t) {
  if (!(t > 0.0)) throw NonpositiveT();
  const auto& s = fp.summary;
  const auto& pp = fp.params;
  return s.A - pp.gamma * fp.e_B * (fp.e_B - 1.0) / (2.0 * pp.p.value()) * std::pow(t, fp.e_B - 2.0) * s.B -
         pp.mu * fp.e_C * (fp.e_C - 1.0) / pp.q.value() * std::pow(t, fp.e_C - 2.0) * s.C;
}

std::vector<CriticalPoint> critical_points(const FiberingProfile& fp) {
  if (!(fp.summary.A > 0.0)) throw DegenerateProfile();

  // phi(t) = g'(t)/t = A - cB t^{eB-2} - cC t^{eC-2}; same roots, better scaled.
  const auto& s = fp.summary;
  const auto& pp = fp.params;
  const double cB = pp.gamma * fp.e_B / (2.0 * pp.p.value()) * s.B;
  const double cC = pp.mu * fp.e_C / pp.q.value() * s.C;
  auto phi = [&](double t) { return s.A - cB * std::pow(t, fp.e_B - 2.0) - cC * std::pow(t, fp.e_C - 2.0); };

  // Expected asymptotic signs from the dominant active power terms
  // (coefficients of equal exponents combine, e.g. at critical p or q).
  auto asymptotic_sign = [&](bool at_zero) {
    std::vector<std::pair<double, double>> terms{{0.0, s.A}};  // (exponent, coefficient)
    if (cB != 0.0) terms.emplace_back(fp.e_B - 2.0, -cB);
    if (cC != 0.0) terms.emplace_back(fp.e_C - 2.0, -cC);
    double dom = terms[0].first;
    for (const auto& [e, c] : terms) dom = at_zero ? std::min(dom, e) : std::max(dom, e);
    double coef = 0.0;
    for (const auto& [e, c] : terms)
      if (e == dom) coef += c;
    return coef >= 0.0 ? 1 : -1;
  };

  std::vector<double> ts(kScanPoints);
  const double lr = std::log(kScanLo), hr = std::log(kScanHi);
  for (int i = 0; i < kScanPoints; ++i) ts[i] = std::exp(lr + (hr - lr) * i / (kScanPoints - 1));

  std::vector<CriticalPoint> out;
  double prev = phi(ts[0]);
  if ((prev >= 0 ? 1 : -1) != asymptotic_sign(true))
    throw DomainError("fibering scan window [1e-6,1e6] misses a root near t -> 0");
  for (int i = 1; i < kScanPoints; ++i) {
    double cur = phi(ts[i]);
    if ((prev < 0.0 && cur >= 0.0) || (prev > 0.0 && cur <= 0.0)) {
      double lo = ts[i - 1], hi = ts[i], flo = prev;
      for (int it = 0; it < 200; ++it) {
        double mid = std::sqrt(lo * hi);  // bisect in log space
        double fm = phi(mid);
        if ((flo < 0.0) == (fm < 0.0)) { lo = mid; flo = fm; } else { hi = mid; }
        if ((hi - lo) <= 1e-12 * lo) break;
      }
      CriticalPoint cp;
      cp.t = 0.5 * (lo + hi);
      cp.g_value = g(fp, cp.t);
      cp.g2_value = g2(fp, cp.t);
      const double tau0 = 1e-9 * g2_scale(fp, cp.t);
      cp.kind = std::abs(cp.g2_value) <= tau0 ? CriticalKind::Inflection
                                              : (cp.g2_value > 0.0 ? CriticalKind::LocalMin : CriticalKind::LocalMax);
      out.push_back(cp);
    }
    prev = cur;
  }
  if ((prev >= 0 ? 1 : -1) != asymptotic_sign(false))
    throw DomainError("fibering scan window [1e-6,1e6] misses a root near t -> infinity");
  std::sort(out.begin(), out.end(), [](const CriticalPoint& a, const CriticalPoint& b) { return a.t < b.t; });
  return out;
}

double t_max(const FiberingProfile& fp) {
  const auto& pp = fp.params;
  const double N = pp.N, p = pp.p.value(), q = pp.q.value(), a = pp.alpha.value();
  const double eB = fp.e_B;
  if (!(pp.gamma > 0.0 && pp.mu > 0.0)) throw RegimeMismatch("t_max needs gamma > 0, mu > 0");
  const bool regime_i = eB > 2.0 && N * (q - 2.0) < 4.0;   // p supercritical, q subcritical
  const bool regime_ii = eB < 2.0 && N * (q - 2.0) > 4.0;  // p subcritical, q supercritical
  if (!regime_i && !regime_ii) throw RegimeMismatch("t_max defined only in the two-root regimes");
  if (!(fp.summary.B > 0.0)) throw RegimeMismatch("t_max needs B > 0");
  const double num = 2.0 * p * (4.0 - N * (q - 2.0)) * fp.summary.A;
  const double den = pp.gamma * (N * p - N - a) * (2.0 * N * p - 2.0 * a - q * N) * fp.summary.B;
  return std::pow(num / den, 1.0 / (N * p - (N + a + 2.0)));
}

namespace {
Field project_to(const Field& u, const ProblemParams& pp, CriticalKind kind, const char* name) {
  auto cps = critical_points(fibering_profile(u, pp));
  for (const auto& cp : cps)
    if (cp.kind == kind) return dilate(u, cp.t);
  throw NoSuchRoot(name);
}
}  // namespace

Field project_minus(const Field& u, const ProblemParams& pp) {
  return project_to(u, pp, CriticalKind::LocalMax, "t_minus (local max)");
}

Field project_plus(const Field& u, const ProblemParams& pp) {
  return project_to(u, pp, CriticalKind::LocalMin, "t_plus (local min)");
}

double beta_scaling_defect(const FunctionalSummary& s, const ProblemParams& pp, double beta, double theta) {
  if (!(theta > 0.0)) throw NonpositiveTheta();
  const double N = pp.N, p = pp.p.value(), q = pp.q.value(), a = pp.alpha.value();
  const double eA = -2.0 * beta;
  const double eB = 2.0 * p - beta * (N * p - N - a) - 2.0;
  const double eC = q * (1.0 - N * beta / 2.0) + N * beta - 2.0;
  return 0.5 * (std::pow(theta, eA) - 1.0) * s.A - pp.gamma / (2.0 * p) * (std::pow(theta, eB) - 1.0) * s.B -
         pp.mu / q * (std::pow(theta, eC) - 1.0) * s.C;
}

double beta_scaling_defect(const Field& u, double beta, double theta, const ProblemParams& pp) {
  return beta_scaling_defect(summary(u, pp), pp, beta, theta);
}

Field beta_scale(const Field& u, double beta, double theta) {
  if (!(theta > 0.0)) throw NonpositiveTheta();
  // u_theta(x) = theta^{1 - N beta/2} u(theta^{-beta} x) = theta * dilate(u, theta^{-beta})
  Field out = dilate(u, std::pow(theta, -beta));
  kernels::scale(out.values, theta);
  return out;
}

Membership membership(const FiberingProfile& fp, double tol) {
  const double scale = pohozaev_scale(fp.summary, fp.params);
  const double qval = pohozaev(fp.summary, fp.params);
  if (scale == 0.0 || std::abs(qval) > tol * scale) return Membership::OffManifold;
  const double g2v = g2(fp, 1.0);
  const double tau0 = 1e-9 * g2_scale(fp, 1.0);
  if (std::abs(g2v) <= tau0) return Membership::MZero;
  return g2v > 0.0 ? Membership::MPlus : Membership::MMinus;
}

Membership membership(const Field& u, const ProblemParams& pp, double tol) {
  return membership(fibering_profile(u, pp), tol);
}

}  // namespace choq
