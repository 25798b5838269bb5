#include "choq/params.hpp"

#include <cmath>
#include <limits>

#include "choq/errors.hpp"

namespace choq {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

bool finite(double v) { return std::isfinite(v); }
}  // namespace

ProblemParams validate(const RawParams& raw) {
  for (auto [v, name] : {std::pair{raw.alpha.value(), "alpha"}, {raw.p.value(), "p"}, {raw.q.value(), "q"},
                         {raw.gamma, "gamma"}, {raw.mu, "mu"}, {raw.c, "c"}}) {
    if (!finite(v)) throw NonfiniteInput(name);
  }
  if (raw.N != 2 && raw.N != 3) throw OutOfWindow("N", "N in {2, 3}");

  const double N = raw.N;
  const double a = raw.alpha.value();
  if (!(a > 0.0 && a < N)) throw OutOfWindow("alpha", "0 < alpha < N");

  const double hartree_lower = (N + a) / N;
  const double hartree_upper = raw.N == 3 ? (N + a) / (N - 2.0) : kInf;
  const double p = raw.p.value();
  if (!(p > hartree_lower)) throw OutOfWindow("p", "lower=" + std::to_string(hartree_lower));
  if (!(p < hartree_upper)) throw OutOfWindow("p", "upper=" + std::to_string(hartree_upper));

  const double sobolev = raw.N == 3 ? 2.0 * N / (N - 2.0) : kInf;
  const double q = raw.q.value();
  if (!(q > 2.0)) throw OutOfWindow("q", "lower=2");
  if (!(q < sobolev)) throw OutOfWindow("q", "upper=" + std::to_string(sobolev));

  if (!(raw.c > 0.0)) throw OutOfWindow("c", "c > 0");

  return ProblemParams{raw.N, raw.alpha, raw.p, raw.q, raw.gamma, raw.mu, raw.c};
}

Exact l2_hartree_exponent(const ProblemParams& pp) {
  return (Exact(Rational(pp.N)) + pp.alpha + Exact(Rational(2))) / Exact(Rational(pp.N));
}

Exact l2_power_exponent(const ProblemParams& pp) { return Exact(Rational(2 * pp.N + 4, pp.N)); }

namespace {
Regime regime_of(const Exact& x, const Exact& crit) {
  switch (x.compare(crit)) {
    case Exact::Cmp::Less: return Regime::Sub;
    case Exact::Cmp::Equal: return Regime::Critical;
    case Exact::Cmp::Greater: return Regime::Super;
    default: return Regime::NearCritical;
  }
}
}  // namespace

ExponentProfile exponent_profile(const ProblemParams& params) {
  ExponentProfile ep;
  const double N = params.N;
  const double a = params.alpha.value();
  ep.l2_power = 2.0 + 4.0 / N;
  ep.l2_hartree = (N + a + 2.0) / N;
  ep.sobolev = params.N == 3 ? 2.0 * N / (N - 2.0) : kInf;
  ep.hartree_upper = params.N == 3 ? (N + a) / (N - 2.0) : kInf;
  ep.hartree_lower = (N + a) / N;
  ep.regime_p = regime_of(params.p, l2_hartree_exponent(params));
  ep.regime_q = regime_of(params.q, l2_power_exponent(params));
  return ep;
}

double riesz_normalization(int N, double alpha) {
  if (!(alpha > 0.0 && alpha < static_cast<double>(N))) throw DomainError("riesz_normalization: alpha not in (0, N)");
  // Gamma((N-alpha)/2) / (pi^{N/2} 2^alpha Gamma(alpha/2)), via lgamma for range safety.
  const double lg = std::lgamma((N - alpha) / 2.0) - std::lgamma(alpha / 2.0);
  return std::exp(lg - (N / 2.0) * std::log(M_PI) - alpha * std::log(2.0));
}

}  // namespace choq
