#include "myco/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace myco {

double norm(const Vec& v, int dim) {
  double s = 0.0;
  for (int a = 0; a < dim; ++a) s += v[a] * v[a];
  return std::sqrt(s);
}

double dot(const Vec& a, const Vec& b, int dim) {
  double s = 0.0;
  for (int c = 0; c < dim; ++c) s += a[c] * b[c];
  return s;
}

GridGeometry::GridGeometry(int dim_, int n_, double L_) : dim(dim_), n(n_), L(L_) {
  if (dim < 1 || dim > 2) throw std::invalid_argument("grid dim must be 1 or 2");
  if (n < 2) throw std::invalid_argument("grid needs at least 2 cells per axis");
  if (L <= 0.0) throw std::invalid_argument("grid half width must be positive");
  h = 2.0 * L / n;
}

std::size_t GridGeometry::size() const {
  std::size_t s = static_cast<std::size_t>(n);
  return dim == 1 ? s : s * s;
}

double GridGeometry::cell_volume() const {
  return dim == 1 ? h : h * h;
}

std::size_t GridGeometry::index(int i, int j) const {
  return dim == 1 ? static_cast<std::size_t>(i)
                  : static_cast<std::size_t>(i) * n + j;
}

Vec GridGeometry::wrap(Vec x) const {
  for (int a = 0; a < dim; ++a) {
    double y = std::fmod(x[a] + L, 2.0 * L);
    if (y < 0.0) y += 2.0 * L;
    x[a] = y - L;
    if (x[a] >= L) x[a] = -L;  // guard against fmod rounding
  }
  return x;
}

Vec GridGeometry::min_image(Vec a, Vec b) const {
  Vec d{0.0, 0.0};
  for (int c = 0; c < dim; ++c) {
    double z = a[c] - b[c];
    z = std::remainder(z, 2.0 * L);
    d[c] = z;
  }
  return d;
}

double ScalarGrid::sum() const {
  double s = 0.0;
  for (double x : v_) s += x;
  return s;
}

double ScalarGrid::max_abs() const {
  double m = 0.0;
  for (double x : v_) m = std::max(m, std::abs(x));
  return m;
}

double ScalarGrid::min_value() const {
  double m = v_.empty() ? 0.0 : v_[0];
  for (double x : v_) m = std::min(m, x);
  return m;
}

double ScalarGrid::max_value() const {
  double m = v_.empty() ? 0.0 : v_[0];
  for (double x : v_) m = std::max(m, x);
  return m;
}

namespace {

struct CicWeights {
  int i0, i1;
  double w0, w1;
};

// Base cell and weights for linear interpolation/deposit along one axis.
CicWeights axis_weights(double x, const GridGeometry& g) {
  double f = (x + g.L) / g.h - 0.5;
  double fl = std::floor(f);
  int i0 = static_cast<int>(fl);
  double w1 = f - fl;
  int n = g.n;
  auto wrapi = [n](int i) {
    i %= n;
    return i < 0 ? i + n : i;
  };
  return {wrapi(i0), wrapi(i0 + 1), 1.0 - w1, w1};
}

}  // namespace

double ScalarGrid::interp(Vec x) const {
  x = geo_.wrap(x);
  const CicWeights a = axis_weights(x[0], geo_);
  if (geo_.dim == 1) {
    return a.w0 * v_[a.i0] + a.w1 * v_[a.i1];
  }
  const CicWeights b = axis_weights(x[1], geo_);
  return a.w0 * (b.w0 * at(a.i0, b.i0) + b.w1 * at(a.i0, b.i1)) +
         a.w1 * (b.w0 * at(a.i1, b.i0) + b.w1 * at(a.i1, b.i1));
}

void ScalarGrid::deposit_cic(Vec x, double mass) {
  x = geo_.wrap(x);
  const double dens = mass / geo_.cell_volume();
  const CicWeights a = axis_weights(x[0], geo_);
  if (geo_.dim == 1) {
    v_[a.i0] += a.w0 * dens;
    v_[a.i1] += a.w1 * dens;
    return;
  }
  const CicWeights b = axis_weights(x[1], geo_);
  at(a.i0, b.i0) += a.w0 * b.w0 * dens;
  at(a.i0, b.i1) += a.w0 * b.w1 * dens;
  at(a.i1, b.i0) += a.w1 * b.w0 * dens;
  at(a.i1, b.i1) += a.w1 * b.w1 * dens;
}

void ScalarGrid::deposit_nearest(Vec x, double mass) {
  x = geo_.wrap(x);
  const double dens = mass / geo_.cell_volume();
  auto nearest = [this](double y) {
    int i = static_cast<int>(std::floor((y + geo_.L) / geo_.h));
    if (i < 0) i = 0;
    if (i >= geo_.n) i = geo_.n - 1;
    return i;
  };
  if (geo_.dim == 1) {
    v_[nearest(x[0])] += dens;
  } else {
    at(nearest(x[0]), nearest(x[1])) += dens;
  }
}

void ScalarGrid::fill(double c) {
  for (double& x : v_) x = c;
}

void ScalarGrid::axpy(double a, const ScalarGrid& other) {
  for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += a * other.v_[k];
}

std::vector<ScalarGrid> central_gradient(const ScalarGrid& f) {
  const GridGeometry& g = f.geo();
  std::vector<ScalarGrid> grad(g.dim, ScalarGrid(g));
  const double inv2h = 1.0 / (2.0 * g.h);
  const int n = g.n;
  auto wrapi = [n](int i) { return (i + n) % n; };
  if (g.dim == 1) {
    for (int i = 0; i < n; ++i) {
      grad[0].at(i) = (f.at(wrapi(i + 1)) - f.at(wrapi(i - 1))) * inv2h;
    }
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        grad[0].at(i, j) = (f.at(wrapi(i + 1), j) - f.at(wrapi(i - 1), j)) * inv2h;
        grad[1].at(i, j) = (f.at(i, wrapi(j + 1)) - f.at(i, wrapi(j - 1))) * inv2h;
      }
    }
  }
  return grad;
}

Vec interp_gradient(const std::vector<ScalarGrid>& grad, Vec x) {
  Vec g{0.0, 0.0};
  for (std::size_t a = 0; a < grad.size(); ++a) g[a] = grad[a].interp(x);
  return g;
}

Convolver::Convolver(const GridGeometry& geo, const std::function<double(Vec)>& kernel,
                     double support_radius)
    : geo_(geo), compact_(support_radius > 0.0) {
  const int n = geo.n;
  if (compact_) {
    const int reach = static_cast<int>(std::ceil(support_radius / geo.h)) + 1;
    for (int di = -reach; di <= reach; ++di) {
      if (geo.dim == 1) {
        Vec z = vec1(di * geo.h);
        double w = kernel(z);
        if (w != 0.0) {
          offsets_.push_back({di, 0});
          weights_.push_back(w);
        }
      } else {
        for (int dj = -reach; dj <= reach; ++dj) {
          Vec z = vec2(di * geo.h, dj * geo.h);
          double w = kernel(z);
          if (w != 0.0) {
            offsets_.push_back({di, dj});
            weights_.push_back(w);
          }
        }
      }
    }
  } else {
    // Tabulate on every circular offset at the minimal-image displacement.
    table_.resize(geo.size());
    for (int di = 0; di < n; ++di) {
      double zx = std::remainder(di * geo.h, 2.0 * geo.L);
      if (geo.dim == 1) {
        table_[geo.index(di)] = kernel(vec1(zx));
      } else {
        for (int dj = 0; dj < n; ++dj) {
          double zy = std::remainder(dj * geo.h, 2.0 * geo.L);
          table_[geo.index(di, dj)] = kernel(vec2(zx, zy));
        }
      }
    }
  }
}

ScalarGrid Convolver::apply(const ScalarGrid& density) const {
  ScalarGrid out(geo_);
  const int n = geo_.n;
  const double vol = geo_.cell_volume();
  if (compact_) {
    if (geo_.dim == 1) {
      for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < offsets_.size(); ++k) {
          int j = (i - offsets_[k][0] + 8 * n) % n;
          s += weights_[k] * density.at(j);
        }
        out.at(i) = s * vol;
      }
    } else {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          double s = 0.0;
          for (std::size_t k = 0; k < offsets_.size(); ++k) {
            int ii = (i - offsets_[k][0] + 8 * n) % n;
            int jj = (j - offsets_[k][1] + 8 * n) % n;
            s += weights_[k] * density.at(ii, jj);
          }
          out.at(i, j) = s * vol;
        }
      }
    }
  } else {
    if (geo_.dim == 1) {
      for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
          s += table_[(i - j + n) % n] * density.at(j);
        }
        out.at(i) = s * vol;
      }
    } else {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          double s = 0.0;
          for (int ii = 0; ii < n; ++ii) {
            const int di = (i - ii + n) % n;
            const double* trow = &table_[geo_.index(di, 0)];
            const double* drow = &density.data()[geo_.index(ii, 0)];
            for (int jj = 0; jj < n; ++jj) {
              s += trow[(j - jj + n) % n] * drow[jj];
            }
          }
          out.at(i, j) = s * vol;
        }
      }
    }
  }
  return out;
}

double Convolver::kernel_mass() const {
  double s = 0.0;
  if (compact_) {
    for (double w : weights_) s += w;
  } else {
    for (double w : table_) s += w;
  }
  return s * geo_.cell_volume();
}

std::uint64_t fnv1a(const void* data, std::size_t nbytes) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (std::size_t i = 0; i < nbytes; ++i) {
    h ^= p[i];
    h *= 0x100000001B3ull;
  }
  return h;
}

std::uint64_t grid_checksum(const ScalarGrid& g) {
  return fnv1a(g.data(), g.size() * sizeof(double));
}

}  // namespace myco
