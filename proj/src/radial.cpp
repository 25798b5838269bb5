#include "choq/radial.hpp"

#include <cmath>
#include <vector>

#include "choq/errors.hpp"
#include "choq/params.hpp"

namespace choq {

namespace {

double sphere_area(int N) { return N == 2 ? 2.0 * M_PI : 4.0 * M_PI; }

// Trapezoid of f(r) r^{N-1} over a uniform mesh, times the sphere area.
// cell_centered meshes start at dr/2 and get a closed-form origin cell.
double radial_quad(int N, const std::vector<double>& r, const std::vector<double>& f, bool cell_centered) {
  const double dr = r[1] - r[0];
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < r.size(); ++i)
    s += 0.5 * (f[i] * std::pow(r[i], N - 1) + f[i + 1] * std::pow(r[i + 1], N - 1)) * dr;
  if (cell_centered) s += f[0] * std::pow(r[0], N) / static_cast<double>(N);
  return sphere_area(N) * s;
}

// 4th-order first derivative, even extension across r=0.
std::vector<double> derivative(const std::vector<double>& u, double dr, bool cell_centered) {
  const std::size_t n = u.size();
  std::vector<double> du(n);
  auto at = [&](long long i) -> double {
    if (i < 0) return u[static_cast<std::size_t>(cell_centered ? -i - 1 : -i)];
    if (i >= static_cast<long long>(n)) return 0.0;
    return u[static_cast<std::size_t>(i)];
  };
  for (std::size_t i = 0; i < n; ++i) {
    long long j = static_cast<long long>(i);
    du[i] = (-at(j + 2) + 8.0 * at(j + 1) - 8.0 * at(j - 1) + at(j - 2)) / (12.0 * dr);
  }
  return du;
}

}  // namespace

RadialProfile power_ground_state(int N, double q) {
  if (N != 2 && N != 3) throw DomainError("power_ground_state: N must be 2 or 3");
  // w'' + (N-1)/r w' - w + w^{q-1} = 0, w(0)=a, w'(0)=0; shoot on a.
  const double rmax = 40.0;
  const double h = 5e-4;

  auto pw = [&](double w) { return w == 0.0 ? 0.0 : std::copysign(std::pow(std::abs(w), q - 1.0), w); };
  // +1: overshoot (w crosses zero), -1: undershoot (w turns back up), 0: decayed cleanly.
  auto shoot = [&](double a, std::vector<double>* traj) {
    double w = a, v = 0.0, r = 0.0;
    auto acc = [&](double rr, double ww, double vv) {
      if (rr <= 0.0) return (ww - pw(ww)) / static_cast<double>(N);
      return ww - pw(ww) - (N - 1) / rr * vv;
    };
    while (r < rmax) {
      if (traj) traj->push_back(w);
      double k1w = v, k1v = acc(r, w, v);
      double k2w = v + 0.5 * h * k1v, k2v = acc(r + 0.5 * h, w + 0.5 * h * k1w, k2w);
      double k3w = v + 0.5 * h * k2v, k3v = acc(r + 0.5 * h, w + 0.5 * h * k2w, k3w);
      double k4w = v + h * k3v, k4v = acc(r + h, w + h * k3w, k4w);
      w += h / 6.0 * (k1w + 2 * k2w + 2 * k3w + k4w);
      v += h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
      r += h;
      if (w <= 0.0) return 1;
      if (v > 0.0 && w < 0.9) return -1;
      if (w < 1e-12) break;
    }
    return 0;
  };

  double lo = 1.1, hi = 1.5;
  while (shoot(hi, nullptr) != 1) {
    lo = hi;
    hi *= 1.5;
    if (hi > 1e6) throw NoConvergence("power ground state: no overshoot bracket", 0, hi);
  }
  while (shoot(lo, nullptr) == 1) {
    hi = lo;
    lo = 1.0 + 0.5 * (lo - 1.0);
  }
  for (int it = 0; it < 100; ++it) {
    double mid = 0.5 * (lo + hi);
    (shoot(mid, nullptr) == 1 ? hi : lo) = mid;
    if (hi - lo < 1e-15 * hi) break;
  }

  std::vector<double> w;
  shoot(0.5 * (lo + hi), &w);
  std::size_t n = w.size();
  while (n > 10 && (w[n - 1] <= 0.0 || w[n - 1] > w[n - 2])) --n;  // drop the contaminated tail
  w.resize(n);

  RadialProfile out;
  out.r.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.r[i] = static_cast<double>(i) * h;
  out.u = w;
  std::vector<double> du = derivative(out.u, h, /*cell_centered=*/false);
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = du[i] * du[i];
  out.A = radial_quad(N, out.r, f, false);
  for (std::size_t i = 0; i < n; ++i) f[i] = std::pow(std::abs(out.u[i]), q);
  out.C = radial_quad(N, out.r, f, false);
  for (std::size_t i = 0; i < n; ++i) f[i] = out.u[i] * out.u[i];
  out.D = radial_quad(N, out.r, f, false);
  out.residual = hi - lo;
  out.iterations = 100;
  return out;
}

namespace {

// I_2 * rho in 3-D for radial rho (Newton shells):
// phi(r) = (1/r) int_0^r rho s^2 ds + int_r^R rho s ds.
std::vector<double> potential_newton3(const std::vector<double>& r, const std::vector<double>& rho) {
  const std::size_t n = r.size();
  const double dr = r[1] - r[0];
  std::vector<double> phi(n);
  std::vector<double> inner(n), outer(n);
  double acc = rho[0] * r[0] * r[0] * r[0] / 3.0;  // origin cell, rho ~ const
  inner[0] = acc;
  for (std::size_t i = 1; i < n; ++i) {
    acc += 0.5 * (rho[i - 1] * r[i - 1] * r[i - 1] + rho[i] * r[i] * r[i]) * dr;
    inner[i] = acc;
  }
  outer[n - 1] = 0.0;
  for (std::size_t i = n - 1; i-- > 0;) outer[i] = outer[i + 1] + 0.5 * (rho[i] * r[i] + rho[i + 1] * r[i + 1]) * dr;
  for (std::size_t i = 0; i < n; ++i) phi[i] = inner[i] / r[i] + outer[i];
  return phi;
}

// Dense kernel matrix for I_1 * rho in 2-D:
//   phi(r_i) = sum_j W[i][j] rho_j,
//   W[i][j] = A(2,1) r_j 4/(r_i+r_j) K(k_ij) dr, k = 2 sqrt(r_i r_j)/(r_i+r_j),
// with the logarithmic diagonal cell integrated in closed form.
std::vector<double> elliptic_kernel_matrix(const std::vector<double>& r) {
  const std::size_t n = r.size();
  const double dr = r[1] - r[0];
  const double A21 = riesz_normalization(2, 1.0);
  std::vector<double> W(n * n);
#pragma omp parallel for schedule(dynamic, 8)
  for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    const double ri = r[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) {
        W[i * n + j] = A21 * r[i] * (2.0 / ri) * dr * (std::log(16.0 * ri / dr) + 1.0);
      } else {
        const double rj = r[j];
        const double k = 2.0 * std::sqrt(ri * rj) / (ri + rj);
        W[i * n + j] = A21 * rj * 4.0 / (ri + rj) * std::comp_ellint_1(k) * dr;
      }
    }
  }
  return W;
}

}  // namespace

RadialProfile choquard_ground_state_radial(int N, double alpha, double p, int mesh, double rmax) {
  const bool newton3 = (N == 3 && alpha == 2.0);
  const bool elliptic2 = (N == 2 && alpha == 1.0);
  if (!newton3 && !elliptic2)
    throw DomainError("choquard_ground_state_radial: only (N,alpha) = (3,2) and (2,1) kernels are implemented");

  const double a = (N * p - N - alpha) / 2.0;
  const double b = (N + alpha - (N - 2.0) * p) / 2.0;
  if (!(a > 0.0 && b > 0.0)) throw DomainError("choquard_ground_state_radial: p outside the admissible window");

  std::size_t n = static_cast<std::size_t>(mesh > 0 ? mesh : (newton3 ? 6000 : 2400));
  const double R = rmax > 0.0 ? rmax : (newton3 ? 30.0 : 24.0);
  const double dr = R / static_cast<double>(n);

  RadialProfile out;
  out.r.resize(n);
  out.u.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.r[i] = (i + 0.5) * dr;  // cell-centered; keeps kernels off r=0
    out.u[i] = 3.0 * std::exp(-out.r[i] * out.r[i] / 2.0);
  }
  auto& r = out.r;
  auto& u = out.u;

  std::vector<double> Wmat;
  if (elliptic2) Wmat = elliptic_kernel_matrix(r);
  auto potential = [&](const std::vector<double>& rho) {
    if (newton3) return potential_newton3(r, rho);
    std::vector<double> phi(n, 0.0);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      double s = 0.0;
      const double* row = &Wmat[static_cast<std::size_t>(i) * n];
      for (std::size_t j = 0; j < n; ++j) s += row[j] * rho[j];
      phi[static_cast<std::size_t>(i)] = s;
    }
    return phi;
  };

  // (-a Lap_r + b)^{-1} via finite differences + Thomas solve. N=3 uses the
  // v = r u substitution (v odd across r=0); N=2 discretizes u'' + u'/r with
  // an even ghost cell.
  auto solve_helmholtz = [&](const std::vector<double>& rhs) {
    std::vector<double> main(n), lower(n - 1), upper(n - 1), f(n), x(n);
    const double c2 = a / (dr * dr);
    if (newton3) {
      for (std::size_t i = 0; i < n; ++i) {
        main[i] = 2.0 * c2 + b;
        f[i] = r[i] * rhs[i];
      }
      for (std::size_t i = 0; i + 1 < n; ++i) lower[i] = upper[i] = -c2;
      main[0] += c2;  // odd ghost: v_{-1} = -v_0
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        main[i] = 2.0 * c2 + b;
        f[i] = rhs[i];
        if (i + 1 < n) upper[i] = -c2 - a / (2.0 * r[i] * dr);
        if (i > 0) lower[i - 1] = -c2 + a / (2.0 * r[i] * dr);
      }
      main[0] += -c2 + a / (2.0 * r[0] * dr);  // even ghost: u_{-1} = u_0
    }
    std::vector<double> cp(n), dp(n);
    cp[0] = upper[0] / main[0];
    dp[0] = f[0] / main[0];
    for (std::size_t i = 1; i < n; ++i) {
      const double m = main[i] - lower[i - 1] * cp[i - 1];
      cp[i] = (i + 1 < n) ? upper[i] / m : 0.0;
      dp[i] = (f[i] - lower[i - 1] * dp[i - 1]) / m;
    }
    x[n - 1] = dp[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = dp[i] - cp[i] * x[i + 1];
    if (newton3)
      for (std::size_t i = 0; i < n; ++i) x[i] /= r[i];
    return x;
  };

  auto quads = [&](const std::vector<double>& uu, const std::vector<double>& phi, double& A_, double& B_, double& D_) {
    std::vector<double> du = derivative(uu, dr, /*cell_centered=*/true), f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = du[i] * du[i];
    A_ = radial_quad(N, r, f, true);
    for (std::size_t i = 0; i < n; ++i) f[i] = phi[i] * std::pow(std::abs(uu[i]), p);
    B_ = radial_quad(N, r, f, true);
    for (std::size_t i = 0; i < n; ++i) f[i] = uu[i] * uu[i];
    D_ = radial_quad(N, r, f, true);
  };

  const double stab = (2.0 * p - 1.0) / (2.0 * p - 2.0);  // degree-counting recipe, homogeneity 2p-1
  std::vector<double> rho(n), rhs(n);
  double du_rel = 1.0;
  int it = 0;
  for (; it < 2000; ++it) {
    for (std::size_t i = 0; i < n; ++i) rho[i] = std::pow(std::abs(u[i]), p);
    std::vector<double> phi = potential(rho);
    for (std::size_t i = 0; i < n; ++i)
      rhs[i] = u[i] == 0.0 ? 0.0 : phi[i] * std::copysign(std::pow(std::abs(u[i]), p - 1.0), u[i]);
    std::vector<double> w = solve_helmholtz(rhs);
    double A_, B_, D_;
    quads(u, phi, A_, B_, D_);
    const double fac = std::pow((a * A_ + b * D_) / B_, stab);
    du_rel = 0.0;
    double umax = 1e-300;
    for (std::size_t i = 0; i < n; ++i) umax = std::max(umax, std::abs(u[i]));
    for (std::size_t i = 0; i < n; ++i) {
      const double nu = fac * w[i];
      du_rel = std::max(du_rel, std::abs(nu - u[i]));
      u[i] = nu;
    }
    du_rel /= umax;
    if (du_rel < 1e-14) break;
  }

  for (std::size_t i = 0; i < n; ++i) rho[i] = std::pow(std::abs(u[i]), p);
  std::vector<double> phi = potential(rho);
  quads(u, phi, out.A, out.B, out.D);
  out.iterations = it;
  out.residual = du_rel;
  if (du_rel > 1e-10) throw NoConvergence("radial Choquard fixed point stalled", it, du_rel);
  return out;
}

}  // namespace choq
