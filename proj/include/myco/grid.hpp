#ifndef MYCO_GRID_HPP
#define MYCO_GRID_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace myco {

// Point in R^d, d <= 2. Unused components are zero.
using Vec = std::array<double, 2>;

inline Vec vec1(double x) { return {x, 0.0}; }
inline Vec vec2(double x, double y) { return {x, y}; }

double norm(const Vec& v, int dim);
double dot(const Vec& a, const Vec& b, int dim);

// Uniform periodic cell-centered grid on [-L, L)^dim, spacing h = 2L/n.
// Cell centers sit at -L + (i + 1/2) h.
struct GridGeometry {
  int dim = 1;
  int n = 0;        // cells per axis
  double L = 0.0;   // half width
  double h = 0.0;   // spacing

  GridGeometry() = default;
  GridGeometry(int dim_, int n_, double L_);

  std::size_t size() const;
  double cell_volume() const;
  double center(int i) const { return -L + (i + 0.5) * h; }
  std::size_t index(int i, int j = 0) const;
  // Wraps x into [-L, L) componentwise.
  Vec wrap(Vec x) const;
  // Shortest periodic displacement a - b.
  Vec min_image(Vec a, Vec b) const;

  bool operator==(const GridGeometry& o) const {
    return dim == o.dim && n == o.n && L == o.L;
  }
};

class ScalarGrid {
 public:
  ScalarGrid() = default;
  explicit ScalarGrid(const GridGeometry& geo, double fill = 0.0)
      : geo_(geo), v_(geo.size(), fill) {}

  const GridGeometry& geo() const { return geo_; }
  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }
  std::size_t size() const { return v_.size(); }
  double& operator[](std::size_t k) { return v_[k]; }
  double operator[](std::size_t k) const { return v_[k]; }
  double& at(int i, int j = 0) { return v_[geo_.index(i, j)]; }
  double at(int i, int j = 0) const { return v_[geo_.index(i, j)]; }

  double sum() const;
  double integral() const { return sum() * geo_.cell_volume(); }
  double max_abs() const;
  double min_value() const;
  double max_value() const;

  // Multilinear interpolation with periodic wrap.
  double interp(Vec x) const;

  // Cloud-in-cell deposit: spreads `mass` (an integral quantity) onto the
  // neighbouring cells so that the grid, read as a density, integrates to it.
  void deposit_cic(Vec x, double mass);
  // Nearest-cell variant, kept as a sensitivity toggle.
  void deposit_nearest(Vec x, double mass);

  void fill(double c);
  void axpy(double a, const ScalarGrid& other);  // this += a * other

 private:
  GridGeometry geo_;
  std::vector<double> v_;
};

// Central-difference gradient at the cell centers, one grid per axis.
std::vector<ScalarGrid> central_gradient(const ScalarGrid& f);

// Multilinear interpolation of a precomputed gradient field.
Vec interp_gradient(const std::vector<ScalarGrid>& grad, Vec x);

// Discrete periodic convolution (kernel * density) * h^d on the grid.
// The kernel is tabulated once on minimal-image offsets; `support_radius`
// <= 0 means global support (full circular convolution), otherwise only
// offsets within the radius enter the stencil.
class Convolver {
 public:
  Convolver() = default;
  Convolver(const GridGeometry& geo, const std::function<double(Vec)>& kernel,
            double support_radius);

  ScalarGrid apply(const ScalarGrid& density) const;
  // Discrete integral of the tabulated kernel (quadrature mass).
  double kernel_mass() const;
  const GridGeometry& geo() const { return geo_; }

 private:
  GridGeometry geo_;
  bool compact_ = false;
  // Compact mode: offsets and weights of the stencil.
  std::vector<std::array<int, 2>> offsets_;
  std::vector<double> weights_;
  // Full mode: kernel table over all n^dim circular offsets.
  std::vector<double> table_;
};

// FNV-1a over the raw bytes, used for snapshot checksums and manifests.
std::uint64_t fnv1a(const void* data, std::size_t nbytes);
std::uint64_t grid_checksum(const ScalarGrid& g);

}  // namespace myco

#endif
