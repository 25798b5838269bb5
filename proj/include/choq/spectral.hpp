#pragma once

#include "choq/field.hpp"

namespace choq {

// Fourier convention: fhat(xi) = integral f(x) e^{-2pi i x.xi} dx, lattice
// frequencies xi_k = k/L. Under it the Riesz potential I_alpha has symbol
// (2pi|xi|)^{-alpha} exactly, with the paper normalization A(N,alpha).

// Periodic Riesz convolution I_alpha * f: multiplier (2pi|xi|)^{-alpha} on
// nonzero modes, zero mode set to 0 (the box-truncated far-field tail; see
// the box-convergence acceptance test). Output is the real part; imaginary
// residue above 1e-12 * ||f|| trips an internal check.
Field riesz_convolve(const Field& f, double alpha);

// Free-space Riesz convolution by zero padding to a 2M cube and applying the
// Fourier transform of the radially truncated kernel A(N,alpha)|x|^{alpha-N}
// 1_{|x|<=R}, R = sqrt(N) L. Spectrally accurate for fields that decay inside
// the box; used where continuum fidelity of the Hartree term matters (ground
// state pipeline, sharpness witnesses).
Field riesz_convolve_freespace(const Field& f, double alpha);

// -Laplace(f), multiplier (2pi|xi|)^2.
Field neg_laplacian(const Field& f);

// (a * (-Laplace) + b)^{-1} f, a, b > 0.
Field inv_helmholtz(const Field& f, double a, double b);

// A(f) = integral |grad f|^2 via the spectral quadratic form.
double gradient_energy(const Field& f);

// Spectral-side L2 mass, for the Parseval invariant test.
double spectral_mass(const Field& f);

// Translation by a real offset via the Fourier shift theorem (exact for
// band-limited fields); used to recenter before symmetry checks.
Field fourier_shift(const Field& f, const std::array<double, 3>& offset);

// Truncated-kernel symbol value at radial frequency xi (exposed for tests).
double truncated_riesz_symbol(int dim, double alpha, double R, double xi);

}  // namespace choq
