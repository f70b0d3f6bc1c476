#include "mmnls/field_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace mmnls {

namespace {

constexpr char kMagic[4] = {'M', 'M', 'F', 'G'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ofstream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::ifstream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw std::runtime_error("field binary: truncated file");
  return v;
}

}  // namespace

void write_field_csv(const ComplexFieldGrid& grid, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os << "z,T,mode,re,im\n";
  char line[160];
  const double dt = grid.t_max / static_cast<double>(grid.n_t);
  for (std::size_t iz = 0; iz < grid.n_checkpoints(); ++iz) {
    for (std::size_t p = 0; p < grid.n_modes; ++p) {
      for (std::size_t j = 0; j < grid.n_t; ++j) {
        const double t = -0.5 * grid.t_max + dt * static_cast<double>(j);
        const auto a = grid.at(p, iz, j);
        std::snprintf(line, sizeof(line), "%.17g,%.17g,%zu,%.17g,%.17g\n",
                      grid.z_checkpoints[iz], t, p + 1, a.real(), a.imag());
        os << line;
      }
    }
  }
}

void write_field_binary(const ComplexFieldGrid& grid, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os.write(kMagic, 4);
  put(os, kVersion);
  put(os, static_cast<std::uint32_t>(grid.n_modes));
  put(os, static_cast<std::uint32_t>(grid.n_checkpoints()));
  put(os, static_cast<std::uint32_t>(grid.n_t));
  put(os, grid.t_max);
  for (double z : grid.z_checkpoints) put(os, z);
  for (std::size_t p = 0; p < grid.n_modes; ++p) {
    for (std::size_t iz = 0; iz < grid.n_checkpoints(); ++iz) {
      for (std::size_t j = 0; j < grid.n_t; ++j) {
        const auto a = grid.at(p, iz, j);
        put(os, a.real());
        put(os, a.imag());
      }
    }
  }
}

ComplexFieldGrid read_field_binary(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::string(magic, 4) != std::string(kMagic, 4))
    throw std::runtime_error("field binary: bad magic in " + path);
  const auto version = get<std::uint32_t>(is);
  if (version != kVersion)
    throw std::runtime_error("field binary: unsupported version " + std::to_string(version));

  ComplexFieldGrid grid;
  grid.n_modes = get<std::uint32_t>(is);
  const auto n_z = get<std::uint32_t>(is);
  grid.n_t = get<std::uint32_t>(is);
  grid.t_max = get<double>(is);
  grid.z_checkpoints.resize(n_z);
  for (auto& z : grid.z_checkpoints) z = get<double>(is);
  grid.modes.assign(grid.n_modes, {});
  for (auto& mode : grid.modes) {
    mode.resize(static_cast<std::size_t>(n_z) * grid.n_t);
    for (auto& a : mode) {
      const double re = get<double>(is);
      const double im = get<double>(is);
      a = {re, im};
    }
  }
  return grid;
}

}  // namespace mmnls
