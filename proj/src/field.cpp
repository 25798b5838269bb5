#include "choq/field.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

#include <nlohmann/json.hpp>

#include "choq/kernels.hpp"

namespace choq {

void Field::require_finite() const {
  if (!kernels::all_finite(values)) throw NonfiniteField();
}

Field dilate(const Field& f, double t) {
  if (!(t > 0.0)) throw NonpositiveDilation();
  Field out(Grid(f.grid.dim, f.grid.points_per_dim, f.grid.box_length / t), f.values);
  const double s = std::pow(t, f.grid.dim / 2.0);
  kernels::scale(out.values, s);
  return out;
}

Field gaussian_field(const Grid& grid, double width, double amplitude, const std::array<double, 3>& center) {
  if (!(width > 0.0)) throw DomainError("gaussian_field: width must be > 0");
  Field out(grid);
  if (amplitude == 0.0) return out;
  const int M = grid.points_per_dim;
  const double L = grid.box_length;
  const double w2 = width * width;

  // Periodization over the 3^N nearest images; farther images are below
  // double precision for every width/box ratio we ever use.
  auto g1 = [&](double x, double c) {
    double s = 0.0;
    for (int n = -1; n <= 1; ++n) {
      double d = x - c + n * L;
      s += std::exp(-d * d / w2);
    }
    return s;
  };

  std::vector<std::vector<double>> axis(grid.dim);
  for (int d = 0; d < grid.dim; ++d) {
    axis[d].resize(M);
    for (int i = 0; i < M; ++i) axis[d][i] = g1(grid.coord(i), center[d]);
  }

  // Separable product; exact for the image-truncated Gaussian.
  if (grid.dim == 1) {
    for (int i = 0; i < M; ++i) out.values[i] = amplitude * axis[0][i];
  } else if (grid.dim == 2) {
    for (int i = 0; i < M; ++i)
      for (int j = 0; j < M; ++j) out.values[static_cast<std::size_t>(i) * M + j] = amplitude * axis[0][i] * axis[1][j];
  } else {
    for (int i = 0; i < M; ++i)
      for (int j = 0; j < M; ++j)
        for (int k = 0; k < M; ++k)
          out.values[(static_cast<std::size_t>(i) * M + j) * M + k] = amplitude * axis[0][i] * axis[1][j] * axis[2][k];
  }
  return out;
}

Field rescale_mass(const Field& f, double c) {
  const double d = f.grid.cell_volume() * kernels::dot(f.values, f.values);
  if (!(d > 0.0)) throw ZeroMass();
  Field out = f;
  kernels::scale(out.values, std::sqrt(c / d));
  return out;
}

void save_field(const Field& f, const std::string& path) {
  static_assert(std::endian::native == std::endian::little, "NFLD1 writer assumes a little-endian host");
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  nlohmann::json header = {
      {"dim", f.grid.dim}, {"points_per_dim", f.grid.points_per_dim}, {"box_length", f.grid.box_length}};
  os << "NFLD1\n" << header.dump() << "\n";
  os.write(reinterpret_cast<const char*>(f.values.data()),
           static_cast<std::streamsize>(f.values.size() * sizeof(double)));
  if (!os) throw IoError("short write to '" + path + "'");
}

Field load_field(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path + "'");
  std::string magic, header_line;
  std::getline(is, magic);
  if (magic != "NFLD1") throw IoError("'" + path + "' is not an NFLD1 file");
  std::getline(is, header_line);
  nlohmann::json header = nlohmann::json::parse(header_line, nullptr, false);
  if (header.is_discarded()) throw IoError("bad NFLD1 header in '" + path + "'");
  Grid g(header.at("dim").get<int>(), header.at("points_per_dim").get<int>(), header.at("box_length").get<double>());
  Field f(g);
  is.read(reinterpret_cast<char*>(f.values.data()), static_cast<std::streamsize>(f.values.size() * sizeof(double)));
  if (static_cast<std::size_t>(is.gcount()) != f.values.size() * sizeof(double))
    throw IoError("truncated NFLD1 payload in '" + path + "'");
  return f;
}

}  // namespace choq
