#include "choq/spectral.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "choq/fft.hpp"
#include "choq/kernels.hpp"
#include "choq/params.hpp"

namespace choq {

namespace {

using fft::cvec;

std::mutex g_table_mutex;
std::map<std::tuple<int, int, double, double>, std::vector<double>> g_riesz_tables;
std::map<std::tuple<int, int, double>, std::vector<double>> g_lap_tables;
std::map<std::tuple<int, int, double, double>, std::vector<double>> g_free_tables;

template <class F>
void for_each_mode(int dim, int M, double L, F&& fn) {
  // fn(flat_index, |xi|^2)
  auto fr = [&](int k) {
    int s = k <= M / 2 ? k : k - M;
    return s / L;
  };
  if (dim == 1) {
    for (int i = 0; i < M; ++i) fn(static_cast<std::size_t>(i), fr(i) * fr(i));
  } else if (dim == 2) {
    for (int i = 0; i < M; ++i) {
      const double a = fr(i) * fr(i);
      for (int j = 0; j < M; ++j) fn(static_cast<std::size_t>(i) * M + j, a + fr(j) * fr(j));
    }
  } else {
    for (int i = 0; i < M; ++i) {
      const double a = fr(i) * fr(i);
      for (int j = 0; j < M; ++j) {
        const double b = a + fr(j) * fr(j);
        for (int k = 0; k < M; ++k) fn((static_cast<std::size_t>(i) * M + j) * M + k, b + fr(k) * fr(k));
      }
    }
  }
}

const std::vector<double>& riesz_table(const Grid& g, double alpha) {
  std::lock_guard<std::mutex> lk(g_table_mutex);
  auto key = std::make_tuple(g.dim, g.points_per_dim, g.box_length, alpha);
  auto it = g_riesz_tables.find(key);
  if (it != g_riesz_tables.end()) return it->second;
  std::vector<double> t(g.size());
  for_each_mode(g.dim, g.points_per_dim, g.box_length, [&](std::size_t idx, double xi2) {
    t[idx] = xi2 > 0.0 ? std::pow(2.0 * M_PI * std::sqrt(xi2), -alpha) : 0.0;
  });
  return g_riesz_tables.emplace(key, std::move(t)).first->second;
}

const std::vector<double>& lap_table(const Grid& g) {
  std::lock_guard<std::mutex> lk(g_table_mutex);
  auto key = std::make_tuple(g.dim, g.points_per_dim, g.box_length);
  auto it = g_lap_tables.find(key);
  if (it != g_lap_tables.end()) return it->second;
  std::vector<double> t(g.size());
  const double c = 4.0 * M_PI * M_PI;
  for_each_mode(g.dim, g.points_per_dim, g.box_length, [&](std::size_t idx, double xi2) { t[idx] = c * xi2; });
  return g_lap_tables.emplace(key, std::move(t)).first->second;
}

cvec to_complex(const std::vector<double>& v) {
  cvec z(v.size());
  const long long n = static_cast<long long>(v.size());
#pragma omp parallel for schedule(static) if (kernels::parallel())
  for (long long i = 0; i < n; ++i) z[i] = v[i];
  return z;
}

// Applies a real multiplier in Fourier space, returns the real part, and
// checks that the imaginary residue stayed at rounding level.
Field apply_symbol(const Field& f, const std::vector<double>& table, double residue_tol) {
  cvec z = to_complex(f.values);
  fft::forward(f.grid, z);
  kernels::apply_multiplier(z, table);
  fft::backward(f.grid, z);

  Field out(f.grid);
  const double inv = 1.0 / static_cast<double>(f.size());
  double max_im = 0.0, max_re = 0.0;
  const long long n = static_cast<long long>(z.size());
#pragma omp parallel for schedule(static) reduction(max : max_im, max_re) if (kernels::parallel())
  for (long long i = 0; i < n; ++i) {
    out.values[i] = z[i].real() * inv;
    max_im = std::max(max_im, std::abs(z[i].imag()) * inv);
    max_re = std::max(max_re, std::abs(out.values[i]));
  }
  if (residue_tol > 0.0 && max_im > residue_tol * std::max(1e-300, max_re))
    throw DomainError("spectral symbol produced a non-real field (imag residue " + std::to_string(max_im) + ")");
  return out;
}

// ---- truncated-kernel (free-space) symbol ------------------------------------

// integral_0^Z J0(t) dt = 2 * sum_{k>=0} J_{2k+1}(Z)
double int_j0(double Z) {
  if (Z <= 0.0) return 0.0;
  double s = 0.0;
  const int kmax = static_cast<int>(Z) + 24;
  for (int k = kmax; k >= 0; --k) s += std::cyl_bessel_j(2 * k + 1, Z);
  return 2.0 * s;
}

// Oscillation-split Simpson for integral_0^R r^{alpha-1} w(2 pi xi r) dr.
template <class W>
double oscillatory_integral(double alpha, double R, double xi, W&& w) {
  const double period = xi > 0.0 ? 1.0 / (2.0 * xi) : R;  // half oscillation of w(2 pi xi r)
  const double step = std::min(R, period / 8.0);
  const int n = std::max(16, 2 * static_cast<int>(std::ceil(R / step / 2.0)));
  const double h = R / n;
  auto f = [&](double r) { return r <= 0.0 ? 0.0 : std::pow(r, alpha - 1.0) * w(2.0 * M_PI * xi * r); };
  double s = f(0.0) + f(R);
  for (int i = 1; i < n; i += 2) s += 4.0 * f(i * h);
  for (int i = 2; i < n; i += 2) s += 2.0 * f(i * h);
  return s * h / 3.0;
}

}  // namespace

double truncated_riesz_symbol(int dim, double alpha, double R, double xi) {
  const double A = riesz_normalization(dim, alpha);
  if (xi <= 0.0) {
    const double surf = dim == 2 ? 2.0 * M_PI : 4.0 * M_PI;
    return A * surf * std::pow(R, alpha) / alpha;
  }
  if (dim == 3 && alpha == 2.0) {
    // (1 - cos(2 pi R xi)) / (4 pi^2 xi^2)
    const double z = 2.0 * M_PI * R * xi;
    return (1.0 - std::cos(z)) / (4.0 * M_PI * M_PI * xi * xi);
  }
  if (dim == 2 && alpha == 1.0) {
    // A(2,1) 2 pi integral_0^R J0(2 pi xi r) dr = int_j0(2 pi R xi) / (2 pi xi)
    return int_j0(2.0 * M_PI * R * xi) / (2.0 * M_PI * xi);
  }
  if (dim == 3) {
    // 4 pi A integral r^{alpha-1} sinc(2 pi xi r) dr
    const double v = oscillatory_integral(alpha, R, xi, [](double z) { return z == 0.0 ? 1.0 : std::sin(z) / z; });
    return 4.0 * M_PI * A * v;
  }
  const double v = oscillatory_integral(alpha, R, xi, [](double z) { return std::cyl_bessel_j(0, z); });
  return 2.0 * M_PI * A * v;
}

namespace {
const std::vector<double>& freespace_table(const Grid& g, double alpha) {
  std::lock_guard<std::mutex> lk(g_table_mutex);
  auto key = std::make_tuple(g.dim, g.points_per_dim, g.box_length, alpha);
  auto it = g_free_tables.find(key);
  if (it != g_free_tables.end()) return it->second;

  const int MP = 2 * g.points_per_dim;
  const double LP = 2.0 * g.box_length;
  // R = L: on the 2x-padded grid no periodic image of the truncated kernel
  // reaches any realized pair distance, and the pairs beyond R sit in the
  // far product tail of a decaying field.
  const double R = g.box_length;
  std::size_t n = 1;
  for (int d = 0; d < g.dim; ++d) n *= static_cast<std::size_t>(MP);
  std::vector<double> t(n);
  // distinct |xi| values are few; memoize the radial symbol
  std::map<double, double> radial;
  for_each_mode(g.dim, MP, LP, [&](std::size_t idx, double xi2) {
    auto rit = radial.find(xi2);
    if (rit == radial.end()) rit = radial.emplace(xi2, truncated_riesz_symbol(g.dim, alpha, R, std::sqrt(xi2))).first;
    t[idx] = rit->second;
  });
  return g_free_tables.emplace(key, std::move(t)).first->second;
}
}  // namespace

Field riesz_convolve(const Field& f, double alpha) {
  f.require_finite();
  if (!(alpha > 0.0 && alpha < static_cast<double>(f.grid.dim))) throw AlphaOutOfRange();
  return apply_symbol(f, riesz_table(f.grid, alpha), 1e-12);
}

Field riesz_convolve_freespace(const Field& f, double alpha) {
  f.require_finite();
  if (!(alpha > 0.0 && alpha < static_cast<double>(f.grid.dim))) throw AlphaOutOfRange();
  const int M = f.grid.points_per_dim;
  const int MP = 2 * M;
  const auto& table = freespace_table(f.grid, alpha);

  std::size_t n = table.size();
  cvec z(n, 0.0);
  // embed the source in the low corner of the padded cube
  if (f.grid.dim == 1) {
    for (int i = 0; i < M; ++i) z[i] = f.values[i];
  } else if (f.grid.dim == 2) {
    for (int i = 0; i < M; ++i)
      for (int j = 0; j < M; ++j) z[static_cast<std::size_t>(i) * MP + j] = f.values[static_cast<std::size_t>(i) * M + j];
  } else {
    for (int i = 0; i < M; ++i)
      for (int j = 0; j < M; ++j)
        for (int k = 0; k < M; ++k)
          z[(static_cast<std::size_t>(i) * MP + j) * MP + k] = f.values[(static_cast<std::size_t>(i) * M + j) * M + k];
  }
  fft::forward_cube(f.grid.dim, MP, z);
  kernels::apply_multiplier(z, table);
  fft::backward_cube(f.grid.dim, MP, z);

  Field out(f.grid);
  const double inv = 1.0 / static_cast<double>(n);
  if (f.grid.dim == 1) {
    for (int i = 0; i < M; ++i) out.values[i] = z[i].real() * inv;
  } else if (f.grid.dim == 2) {
    for (int i = 0; i < M; ++i)
      for (int j = 0; j < M; ++j)
        out.values[static_cast<std::size_t>(i) * M + j] = z[static_cast<std::size_t>(i) * MP + j].real() * inv;
  } else {
    for (int i = 0; i < M; ++i)
      for (int j = 0; j < M; ++j)
        for (int k = 0; k < M; ++k)
          out.values[(static_cast<std::size_t>(i) * M + j) * M + k] =
              z[(static_cast<std::size_t>(i) * MP + j) * MP + k].real() * inv;
  }
  return out;
}

Field neg_laplacian(const Field& f) {
  f.require_finite();
  return apply_symbol(f, lap_table(f.grid), 1e-10);
}

Field inv_helmholtz(const Field& f, double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw DomainError("inv_helmholtz: a, b must be > 0");
  const auto& lap = lap_table(f.grid);
  std::vector<double> inv_tab(lap.size());
  const long long n = static_cast<long long>(lap.size());
#pragma omp parallel for schedule(static) if (kernels::parallel())
  for (long long i = 0; i < n; ++i) inv_tab[i] = 1.0 / (a * lap[i] + b);
  return apply_symbol(f, inv_tab, 0.0);
}

double gradient_energy(const Field& f) {
  cvec z = to_complex(f.values);
  fft::forward(f.grid, z);
  const double s = kernels::weighted_norm2(z, lap_table(f.grid));
  return s * f.grid.cell_volume() / static_cast<double>(f.size());
}

double spectral_mass(const Field& f) {
  cvec z = to_complex(f.values);
  fft::forward(f.grid, z);
  double s = 0.0;
  for (const auto& v : z) s += std::norm(v);
  return s * f.grid.cell_volume() / static_cast<double>(f.size());
}

Field fourier_shift(const Field& f, const std::array<double, 3>& offset) {
  cvec z = to_complex(f.values);
  fft::forward(f.grid, z);
  const int M = f.grid.points_per_dim;
  const double L = f.grid.box_length;
  auto fr = [&](int k) { return (k <= M / 2 ? k : k - M) / L; };
  auto phase = [&](double xi_dot_v) { return std::polar(1.0, -2.0 * M_PI * xi_dot_v); };
  if (f.grid.dim == 1) {
    for (int i = 0; i < M; ++i) z[i] *= phase(fr(i) * offset[0]);
  } else if (f.grid.dim == 2) {
    for (int i = 0; i < M; ++i)
      for (int j = 0; j < M; ++j) z[static_cast<std::size_t>(i) * M + j] *= phase(fr(i) * offset[0] + fr(j) * offset[1]);
  } else {
    for (int i = 0; i < M; ++i)
      for (int j = 0; j < M; ++j)
        for (int k = 0; k < M; ++k)
          z[(static_cast<std::size_t>(i) * M + j) * M + k] *=
              phase(fr(i) * offset[0] + fr(j) * offset[1] + fr(k) * offset[2]);
  }
  fft::backward(f.grid, z);
  Field out(f.grid);
  const double inv = 1.0 / static_cast<double>(f.size());
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = z[i].real() * inv;
  return out;
}

}  // namespace choq
