#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace normlab {

class Tape;

/// Dense row-major tensor of 64-bit floats with optional gradient storage.
/// Tensor is a cheap shared handle; ops never mutate forward data after
/// creation, so sharing is safe. `node` identifies the producing node on
/// the active tape (-1 = constant, not recorded).
struct TensorImpl {
  std::vector<int> shape;
  std::vector<double> data;
  std::vector<double> grad;  // empty = absent
  long node = -1;
  const Tape* tape = nullptr;
};

class Tensor {
 public:
  Tensor() : p_(std::make_shared<TensorImpl>()) {}
  explicit Tensor(std::vector<int> shape)
      : p_(std::make_shared<TensorImpl>()) {
    p_->shape = std::move(shape);
    p_->data.assign(checked_numel(p_->shape), 0.0);
  }
  Tensor(std::vector<int> shape, std::vector<double> data)
      : p_(std::make_shared<TensorImpl>()) {
    if (checked_numel(shape) != static_cast<long>(data.size()))
      throw std::invalid_argument("tensor: data length " +
                                  std::to_string(data.size()) +
                                  " does not match shape");
    p_->shape = std::move(shape);
    p_->data = std::move(data);
  }

  static Tensor scalar(double v) { return Tensor({1}, {v}); }

  const std::vector<int>& shape() const { return p_->shape; }
  long numel() const { return static_cast<long>(p_->data.size()); }
  int dim(int i) const { return p_->shape.at(i); }
  int ndim() const { return static_cast<int>(p_->shape.size()); }

  int rows() const { return ndim() == 1 ? 1 : dim(0); }
  int cols() const { return ndim() == 1 ? dim(0) : dim(ndim() - 1); }

  std::vector<double>& data() { return p_->data; }
  const std::vector<double>& data() const { return p_->data; }
  double& operator[](long i) { return p_->data[i]; }
  double operator[](long i) const { return p_->data[i]; }
  double& at(int r, int c) { return p_->data[static_cast<long>(r) * cols() + c]; }
  double at(int r, int c) const { return p_->data[static_cast<long>(r) * cols() + c]; }

  bool has_grad() const { return !p_->grad.empty(); }
  std::vector<double>& grad() { return p_->grad; }
  const std::vector<double>& grad() const { return p_->grad; }
  void ensure_grad() {
    if (p_->grad.empty()) p_->grad.assign(p_->data.size(), 0.0);
  }
  void clear_grad() { p_->grad.clear(); }

  long node() const { return p_->node; }
  const Tape* tape() const { return p_->tape; }
  void bind(const Tape* t, long id) {
    p_->tape = t;
    p_->node = id;
  }
  void unbind() {
    p_->tape = nullptr;
    p_->node = -1;
  }

  /// Deep copy of values (drops grad and tape binding).
  Tensor clone() const { return Tensor(p_->shape, p_->data); }

  bool same_impl(const Tensor& o) const { return p_ == o.p_; }

  std::string shape_str() const {
    std::string s = "[";
    for (size_t i = 0; i < p_->shape.size(); ++i)
      s += (i ? "x" : "") + std::to_string(p_->shape[i]);
    return s + "]";
  }

  static long checked_numel(const std::vector<int>& shape) {
    long n = 1;
    for (int d : shape) {
      if (d < 0) throw std::invalid_argument("tensor: negative dimension");
      n *= d;
    }
    return n;
  }

 private:
  std::shared_ptr<TensorImpl> p_;
};

inline bool same_shape(const Tensor& a, const Tensor& b) {
  return a.shape() == b.shape();
}

}  // namespace normlab
