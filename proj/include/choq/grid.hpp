#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "choq/errors.hpp"

namespace choq {

// Uniform periodic grid on [-L/2, L/2)^N, M samples per axis.
struct Grid {
  int dim = 2;
  int points_per_dim = 64;
  double box_length = 16.0;

  Grid() = default;
  Grid(int dim_, int points_, double box_) : dim(dim_), points_per_dim(points_), box_length(box_) {
    if (dim != 1 && dim != 2 && dim != 3) throw DomainError("Grid: dim must be 1, 2 or 3");
    if (points_per_dim < 8 || (points_per_dim & (points_per_dim - 1)) != 0)
      throw DomainError("Grid: points_per_dim must be a power of two >= 8");
    if (!(box_length > 0.0)) throw DomainError("Grid: box_length must be > 0");
    if (size() > (std::size_t{1} << 28)) throw DomainError("Grid: total samples exceed 2^28");
  }

  double spacing() const { return box_length / points_per_dim; }

  std::size_t size() const {
    std::size_t s = 1;
    for (int d = 0; d < dim; ++d) s *= static_cast<std::size_t>(points_per_dim);
    return s;
  }

  // Physical coordinate of lattice index i along one axis.
  double coord(int i) const { return -box_length / 2.0 + i * spacing(); }

  // Signed integer frequency for DFT index k (k > M/2 wraps negative).
  int freq_index(int k) const { return k <= points_per_dim / 2 ? k : k - points_per_dim; }

  // Frequency in cycles per unit length: xi_k = freq_index(k) / L.
  double freq(int k) const { return freq_index(k) / box_length; }

  double cell_volume() const {
    double v = 1.0;
    for (int d = 0; d < dim; ++d) v *= spacing();
    return v;
  }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.dim == b.dim && a.points_per_dim == b.points_per_dim && a.box_length == b.box_length;
  }
};

}  // namespace choq
