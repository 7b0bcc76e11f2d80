#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace spts {

std::string shape_str(const std::vector<int>& shape);
int64_t shape_numel(const std::vector<int>& shape);

/// Dense row-major array. Last axis is contiguous.
template <typename T>
struct Tensor {
  std::vector<int> shape;
  std::vector<T> v;

  Tensor() = default;
  explicit Tensor(std::vector<int> s) : shape(std::move(s)), v(shape_numel(shape), T{0}) {}
  Tensor(std::vector<int> s, std::vector<T> values) : shape(std::move(s)), v(std::move(values)) {}

  static Tensor zeros(std::vector<int> s) { return Tensor(std::move(s)); }
  static Tensor full(std::vector<int> s, T value) {
    Tensor t(std::move(s));
    std::fill(t.v.begin(), t.v.end(), value);
    return t;
  }
  static Tensor scalar(T value) { return Tensor({1}, {value}); }

  int ndim() const { return static_cast<int>(shape.size()); }
  int64_t numel() const { return static_cast<int64_t>(v.size()); }
  int dim(int i) const { return shape[i < 0 ? shape.size() + i : i]; }

  T* data() { return v.data(); }
  const T* data() const { return v.data(); }

  T& operator()(int i) { return v[i]; }
  T operator()(int i) const { return v[i]; }
  T& operator()(int i, int j) { return v[static_cast<int64_t>(i) * shape[1] + j]; }
  T operator()(int i, int j) const { return v[static_cast<int64_t>(i) * shape[1] + j]; }
  T& operator()(int i, int j, int k) {
    return v[(static_cast<int64_t>(i) * shape[1] + j) * shape[2] + k];
  }
  T operator()(int i, int j, int k) const {
    return v[(static_cast<int64_t>(i) * shape[1] + j) * shape[2] + k];
  }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }

  bool all_finite() const {
    for (T x : v)
      if (!std::isfinite(static_cast<double>(x))) return false;
    return true;
  }

  template <typename U>
  Tensor<U> cast() const {
    Tensor<U> out;
    out.shape = shape;
    out.v.resize(v.size());
    for (size_t i = 0; i < v.size(); ++i) out.v[i] = static_cast<U>(v[i]);
    return out;
  }
};

}  // namespace spts
