#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace choq::kernels {

// Data-parallel primitives behind every field operation. Each kernel has an
// OpenMP implementation and a serial reference (suffix _serial) kept for
// testing and benchmarking; parallel() toggles which one the dispatching
// front-ends use. Reductions are blocked with a fixed block size so results
// are bit-identical for any thread count.

bool parallel();
void set_parallel(bool on);

inline constexpr std::size_t kReduceBlock = 4096;

// sum_i a[i]
double sum(std::span<const double> a);
double sum_serial(std::span<const double> a);

// sum_i a[i] * b[i]
double dot(std::span<const double> a, std::span<const double> b);
double dot_serial(std::span<const double> a, std::span<const double> b);

// sum_i |a[i]|^s
double pow_sum(std::span<const double> a, double s);
double pow_sum_serial(std::span<const double> a, double s);

// out[i] = |u[i]|^s            (s > 0; 0^s := 0)
void abs_pow(std::span<const double> u, double s, std::span<double> out);
void abs_pow_serial(std::span<const double> u, double s, std::span<double> out);

// out[i] = |u[i]|^{s-1} sign(u[i]) = |u[i]|^{s-2} u[i] * |u[i]|; the odd power
// convention used by the nonlinearities (s > 1; 0 maps to 0).
void signed_pow(std::span<const double> u, double s, std::span<double> out);
void signed_pow_serial(std::span<const double> u, double s, std::span<double> out);

// y[i] += a * x[i]
void axpy(double a, std::span<const double> x, std::span<double> y);
void axpy_serial(double a, std::span<const double> x, std::span<double> y);

// y[i] *= a
void scale(std::span<double> y, double a);
void scale_serial(std::span<double> y, double a);

// out[i] = a[i] * b[i]
void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out);
void multiply_serial(std::span<const double> a, std::span<const double> b, std::span<double> out);

// z[i] *= m[i] for complex spectra with a real multiplier table
void apply_multiplier(std::span<std::complex<double>> z, std::span<const double> m);
void apply_multiplier_serial(std::span<std::complex<double>> z, std::span<const double> m);

// sum_i m[i] * |z[i]|^2  (spectral quadratic forms)
double weighted_norm2(std::span<const std::complex<double>> z, std::span<const double> m);
double weighted_norm2_serial(std::span<const std::complex<double>> z, std::span<const double> m);

bool all_finite(std::span<const double> a);

}  // namespace choq::kernels
