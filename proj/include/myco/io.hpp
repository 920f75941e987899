#ifndef MYCO_IO_HPP
#define MYCO_IO_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "myco/grid.hpp"

namespace myco {

// Binary field dump: 32-byte header then row-major little-endian float64.
//
//   offset  size  field
//   0       4     magic "MFG1"
//   4       1     rank (1 or 2)
//   5       1     flags (bit 0: complex, interleaved re/im)
//   6       2     reserved, zero
//   8       4     dim0 (uint32)
//   12      4     dim1 (uint32, 1 when rank == 1)
//   16      8     spacing0 (float64)
//   24      8     spacing1 (float64, 0 when rank == 1)
struct FieldDump {
  int rank = 1;
  bool is_complex = false;
  std::array<std::uint32_t, 2> dims{1, 1};
  std::array<double, 2> spacing{0.0, 0.0};
  std::vector<double> data;  // complex: interleaved, length 2*dim0*dim1
};

void write_field_dump(const std::string& path, const FieldDump& d);
FieldDump read_field_dump(const std::string& path);

void write_grid_dump(const std::string& path, const ScalarGrid& g);
ScalarGrid read_grid_dump(const std::string& path);

void write_complex_dump(const std::string& path, int dim0, int dim1, double sp0, double sp1,
                        const std::vector<std::complex<double>>& z);

bool make_directories(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace myco

#endif
