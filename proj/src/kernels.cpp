#include "choq/kernels.hpp"

#include <atomic>
#include <cmath>
#include <vector>

namespace choq::kernels {

namespace {
std::atomic<bool> g_parallel{true};

// Deterministic blocked reduction: per-block partial sums in fixed order,
// then one serial pass. Identical bits for any thread count.
template <class F>
double blocked_reduce(std::size_t n, F&& block_sum) {
  const std::size_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
  if (nblocks <= 1) return n ? block_sum(0, n) : 0.0;
  std::vector<double> partial(nblocks);
#pragma omp parallel for schedule(static) if (g_parallel.load(std::memory_order_relaxed))
  for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kReduceBlock;
    const std::size_t hi = std::min(lo + kReduceBlock, n);
    partial[static_cast<std::size_t>(b)] = block_sum(lo, hi);
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

template <class F>
double serial_reduce(std::size_t n, F&& block_sum) {
  const std::size_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
  double total = 0.0;
  for (std::size_t b = 0; b < nblocks; ++b) {
    const std::size_t lo = b * kReduceBlock;
    total += block_sum(lo, std::min(lo + kReduceBlock, n));
  }
  return total;
}
}  // namespace

bool parallel() { return g_parallel.load(std::memory_order_relaxed); }
void set_parallel(bool on) { g_parallel.store(on, std::memory_order_relaxed); }

double sum(std::span<const double> a) {
  return blocked_reduce(a.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += a[i];
    return s;
  });
}

double sum_serial(std::span<const double> a) {
  return serial_reduce(a.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += a[i];
    return s;
  });
}

double dot(std::span<const double> a, std::span<const double> b) {
  return blocked_reduce(a.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += a[i] * b[i];
    return s;
  });
}

double dot_serial(std::span<const double> a, std::span<const double> b) {
  return serial_reduce(a.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += a[i] * b[i];
    return s;
  });
}

double pow_sum(std::span<const double> a, double s) {
  return blocked_reduce(a.size(), [&](std::size_t lo, std::size_t hi) {
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += std::pow(std::abs(a[i]), s);
    return acc;
  });
}

double pow_sum_serial(std::span<const double> a, double s) {
  return serial_reduce(a.size(), [&](std::size_t lo, std::size_t hi) {
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += std::pow(std::abs(a[i]), s);
    return acc;
  });
}

void abs_pow(std::span<const double> u, double s, std::span<double> out) {
  const long long n = static_cast<long long>(u.size());
#pragma omp parallel for schedule(static) if (g_parallel.load(std::memory_order_relaxed))
  for (long long i = 0; i < n; ++i) out[i] = u[i] == 0.0 ? 0.0 : std::pow(std::abs(u[i]), s);
}

void abs_pow_serial(std::span<const double> u, double s, std::span<double> out) {
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] == 0.0 ? 0.0 : std::pow(std::abs(u[i]), s);
}

void signed_pow(std::span<const double> u, double s, std::span<double> out) {
  const long long n = static_cast<long long>(u.size());
#pragma omp parallel for schedule(static) if (g_parallel.load(std::memory_order_relaxed))
  for (long long i = 0; i < n; ++i)
    out[i] = u[i] == 0.0 ? 0.0 : std::copysign(std::pow(std::abs(u[i]), s - 1.0), u[i]);
}

void signed_pow_serial(std::span<const double> u, double s, std::span<double> out) {
  for (std::size_t i = 0; i < u.size(); ++i)
    out[i] = u[i] == 0.0 ? 0.0 : std::copysign(std::pow(std::abs(u[i]), s - 1.0), u[i]);
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  const long long n = static_cast<long long>(x.size());
#pragma omp parallel for schedule(static) if (g_parallel.load(std::memory_order_relaxed))
  for (long long i = 0; i < n; ++i) y[i] += a * x[i];
}

void axpy_serial(double a, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

void scale(std::span<double> y, double a) {
  const long long n = static_cast<long long>(y.size());
#pragma omp parallel for schedule(static) if (g_parallel.load(std::memory_order_relaxed))
  for (long long i = 0; i < n; ++i) y[i] *= a;
}

void scale_serial(std::span<double> y, double a) {
  for (double& v : y) v *= a;
}

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  const long long n = static_cast<long long>(a.size());
#pragma omp parallel for schedule(static) if (g_parallel.load(std::memory_order_relaxed))
  for (long long i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void multiply_serial(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
}

void apply_multiplier(std::span<std::complex<double>> z, std::span<const double> m) {
  const long long n = static_cast<long long>(z.size());
#pragma omp parallel for schedule(static) if (g_parallel.load(std::memory_order_relaxed))
  for (long long i = 0; i < n; ++i) z[i] *= m[i];
}

void apply_multiplier_serial(std::span<std::complex<double>> z, std::span<const double> m) {
  for (std::size_t i = 0; i < z.size(); ++i) z[i] *= m[i];
}

double weighted_norm2(std::span<const std::complex<double>> z, std::span<const double> m) {
  return blocked_reduce(z.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += m[i] * std::norm(z[i]);
    return s;
  });
}

double weighted_norm2_serial(std::span<const std::complex<double>> z, std::span<const double> m) {
  return serial_reduce(z.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += m[i] * std::norm(z[i]);
    return s;
  });
}

bool all_finite(std::span<const double> a) {
  const long long n = static_cast<long long>(a.size());
  std::atomic<bool> ok{true};
#pragma omp parallel for schedule(static) if (g_parallel.load(std::memory_order_relaxed))
  for (long long i = 0; i < n; ++i) {
    if (!std::isfinite(a[i])) ok.store(false, std::memory_order_relaxed);
  }
  return ok.load();
}

}  // namespace choq::kernels
