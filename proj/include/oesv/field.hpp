#ifndef OESV_FIELD_HPP_
#define OESV_FIELD_HPP_

#include <algorithm>
#include <cassert>
#include <span>
#include <vector>

namespace oesv {

/// Modal Legendre coefficients of a piecewise-polynomial solution.
///
/// Layout is [cell][component][mode]. In 1D a cell has k+1 modes; in 2D the
/// (k+1)^2 tensor modes are ordered a + (k+1) b where a is the x-degree and b
/// the y-degree. Mode 0 is the cell average because P_0 = 1.
class Field {
 public:
  Field() = default;
  Field(int dim, int k, int num_cells, int num_comp)
      : dim_(dim), k_(k), cells_(num_cells), comps_(num_comp),
        modes_(dim == 1 ? k + 1 : (k + 1) * (k + 1)),
        data_(static_cast<std::size_t>(num_cells) * num_comp * modes_, 0.0) {}

  int dim() const { return dim_; }
  int k() const { return k_; }
  int num_cells() const { return cells_; }
  int num_comp() const { return comps_; }
  int num_modes() const { return modes_; }
  std::size_t size() const { return data_.size(); }

  double& operator()(int cell, int comp, int mode) { return data_[offset(cell, comp) + mode]; }
  double operator()(int cell, int comp, int mode) const {
    return data_[offset(cell, comp) + mode];
  }

  std::span<double> modes(int cell, int comp) {
    return {data_.data() + offset(cell, comp), static_cast<std::size_t>(modes_)};
  }
  std::span<const double> modes(int cell, int comp) const {
    return {data_.data() + offset(cell, comp), static_cast<std::size_t>(modes_)};
  }
  std::span<double> cell(int c) {
    return {data_.data() + offset(c, 0), static_cast<std::size_t>(modes_ * comps_)};
  }
  std::span<const double> cell(int c) const {
    return {data_.data() + offset(c, 0), static_cast<std::size_t>(modes_ * comps_)};
  }

  double average(int cell, int comp) const { return (*this)(cell, comp, 0); }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool same_shape(const Field& o) const {
    return dim_ == o.dim_ && k_ == o.k_ && cells_ == o.cells_ && comps_ == o.comps_;
  }

  void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

  Field& operator*=(double s) {
    for (double& x : data_) x *= s;
    return *this;
  }
  Field& operator+=(const Field& o) {
    assert(same_shape(o));
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Field& operator-=(const Field& o) {
    assert(same_shape(o));
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  /// this += a * x
  Field& axpy(double a, const Field& x) {
    assert(same_shape(x));
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += a * x.data_[i];
    return *this;
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.same_shape(b) && a.data_ == b.data_;
  }

 private:
  std::size_t offset(int cell, int comp) const {
    return (static_cast<std::size_t>(cell) * comps_ + comp) * modes_;
  }

  int dim_ = 1, k_ = 0, cells_ = 0, comps_ = 0, modes_ = 0;
  std::vector<double> data_;
};

inline Field operator-(Field a, const Field& b) { return a -= b; }
inline Field operator+(Field a, const Field& b) { return a += b; }
inline Field operator*(double s, Field a) { return a *= s; }

}  // namespace oesv

#endif  // OESV_FIELD_HPP_
