#include "myco/io.hpp"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace myco {

namespace {

template <class T>
void put(std::ofstream& f, const T& v) {
  f.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::ifstream& f) {
  T v{};
  f.read(reinterpret_cast<char*>(&v), sizeof(T));
  return v;
}

}  // namespace

void write_field_dump(const std::string& path, const FieldDump& d) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f.write("MFG1", 4);
  put<std::uint8_t>(f, static_cast<std::uint8_t>(d.rank));
  put<std::uint8_t>(f, d.is_complex ? 1 : 0);
  put<std::uint16_t>(f, 0);
  put<std::uint32_t>(f, d.dims[0]);
  put<std::uint32_t>(f, d.dims[1]);
  put<double>(f, d.spacing[0]);
  put<double>(f, d.spacing[1]);
  f.write(reinterpret_cast<const char*>(d.data.data()),
          static_cast<std::streamsize>(d.data.size() * sizeof(double)));
}

FieldDump read_field_dump(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open: " + path);
  char magic[4];
  f.read(magic, 4);
  if (std::memcmp(magic, "MFG1", 4) != 0) throw std::runtime_error("bad magic in " + path);
  FieldDump d;
  d.rank = get<std::uint8_t>(f);
  d.is_complex = get<std::uint8_t>(f) & 1;
  (void)get<std::uint16_t>(f);
  d.dims[0] = get<std::uint32_t>(f);
  d.dims[1] = get<std::uint32_t>(f);
  d.spacing[0] = get<double>(f);
  d.spacing[1] = get<double>(f);
  std::size_t count = static_cast<std::size_t>(d.dims[0]) * d.dims[1] * (d.is_complex ? 2 : 1);
  d.data.resize(count);
  f.read(reinterpret_cast<char*>(d.data.data()),
         static_cast<std::streamsize>(count * sizeof(double)));
  if (!f) throw std::runtime_error("truncated dump: " + path);
  return d;
}

void write_grid_dump(const std::string& path, const ScalarGrid& g) {
  FieldDump d;
  d.rank = g.geo().dim;
  d.dims = {static_cast<std::uint32_t>(g.geo().n),
            g.geo().dim == 2 ? static_cast<std::uint32_t>(g.geo().n) : 1u};
  d.spacing = {g.geo().h, g.geo().dim == 2 ? g.geo().h : 0.0};
  d.data.assign(g.data(), g.data() + g.size());
  write_field_dump(path, d);
}

ScalarGrid read_grid_dump(const std::string& path) {
  FieldDump d = read_field_dump(path);
  if (d.is_complex) throw std::runtime_error("expected real field: " + path);
  GridGeometry geo(d.rank, static_cast<int>(d.dims[0]),
                   0.5 * d.spacing[0] * d.dims[0]);
  ScalarGrid g(geo);
  if (g.size() != d.data.size()) throw std::runtime_error("dump size mismatch: " + path);
  std::memcpy(g.data(), d.data.data(), d.data.size() * sizeof(double));
  return g;
}

void write_complex_dump(const std::string& path, int dim0, int dim1, double sp0, double sp1,
                        const std::vector<std::complex<double>>& z) {
  FieldDump d;
  d.rank = dim1 > 1 ? 2 : 1;
  d.is_complex = true;
  d.dims = {static_cast<std::uint32_t>(dim0), static_cast<std::uint32_t>(dim1)};
  d.spacing = {sp0, sp1};
  d.data.resize(z.size() * 2);
  for (std::size_t i = 0; i < z.size(); ++i) {
    d.data[2 * i] = z[i].real();
    d.data[2 * i + 1] = z[i].imag();
  }
  write_field_dump(path, d);
}

bool make_directories(const std::string& path) {
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  return !ec;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace myco
