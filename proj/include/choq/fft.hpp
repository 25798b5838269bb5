#pragma once

#include <complex>
#include <vector>

#include "choq/grid.hpp"

namespace choq::fft {

using cvec = std::vector<std::complex<double>>;

// Unnormalized c2c transforms (FFTW sign conventions: forward = e^{-2pi i}).
// Plans are cached per shape behind a mutex; execution is reentrant.
void forward(const Grid& g, cvec& inout);
void backward(const Grid& g, cvec& inout);

// Same, for an M^dim cube of side `points` (used by padded free-space grids).
void forward_cube(int dim, int points, cvec& inout);
void backward_cube(int dim, int points, cvec& inout);

}  // namespace choq::fft
