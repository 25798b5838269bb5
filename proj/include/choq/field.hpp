#pragma once

#include <array>
#include <string>
#include <vector>

#include "choq/grid.hpp"

namespace choq {

// A real sampled function on a periodic box. Fields are immutable values in
// spirit: operations return new fields, nothing mutates shared state.
struct Field {
  Grid grid;
  std::vector<double> values;  // row-major, u(x_j)

  Field() = default;
  explicit Field(const Grid& g) : grid(g), values(g.size(), 0.0) {}
  Field(const Grid& g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if (values.size() != g.size()) throw DomainError("Field: value count does not match grid");
  }

  std::size_t size() const { return values.size(); }
  void require_finite() const;
};

// u_t(x) = t^{N/2} u(tx): values scaled by t^{N/2}, box shrunk to L/t.
// Pure metadata dilation; the scaling laws A -> t^2 A etc. hold to rounding.
Field dilate(const Field& f, double t);

// amplitude * exp(-|x - center|^2 / width^2), periodized over nearest images.
Field gaussian_field(const Grid& grid, double width, double amplitude, const std::array<double, 3>& center = {});

// Scales values so that the discrete mass h^N sum u^2 equals c exactly.
Field rescale_mass(const Field& f, double c);

// NFLD1 container: magic line, one-line JSON header, raw little-endian f64.
void save_field(const Field& f, const std::string& path);
Field load_field(const std::string& path);

}  // namespace choq
