#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace elax {

// Cell-centered scalar field on the meridian rectangle with a two-cell halo.
// Interior indices run i in [0, nr), j in [0, nz); the halo extends both
// index ranges by HALO on each side. Storage is row-major in j.
class Field {
 public:
  static constexpr int HALO = 2;

  Field() = default;
  Field(int nr, int nz, double init = 0.0)
      : nr_(nr), nz_(nz), data_(static_cast<std::size_t>(nr + 2 * HALO) * (nz + 2 * HALO), init) {}

  int nr() const { return nr_; }
  int nz() const { return nz_; }

  double& operator()(int i, int j) {
    assert(i >= -HALO && i < nr_ + HALO && j >= -HALO && j < nz_ + HALO);
    return data_[idx(i, j)];
  }
  double operator()(int i, int j) const {
    assert(i >= -HALO && i < nr_ + HALO && j >= -HALO && j < nz_ + HALO);
    return data_[idx(i, j)];
  }

  bool same_shape(const Field& o) const { return nr_ == o.nr_ && nz_ == o.nz_; }

  void fill(double v) {
    for (auto& x : data_) x = v;
  }

  double max_abs_interior() const {
    double m = 0.0;
    for (int i = 0; i < nr_; ++i)
      for (int j = 0; j < nz_; ++j) {
        double a = (*this)(i, j);
        if (a < 0) a = -a;
        if (a > m) m = a;
      }
    return m;
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i + HALO) * (nz_ + 2 * HALO) + (j + HALO);
  }

  int nr_ = 0, nz_ = 0;
  std::vector<double> data_;
};

}  // namespace elax
