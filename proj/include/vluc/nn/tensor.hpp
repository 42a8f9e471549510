#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace vluc::nn {

using Shape = std::vector<std::size_t>;

/// Dense row-major n-dimensional array of doubles. Image-like tensors use
/// (B, H, W, C) and sequences (B, L, H, W, C), channels fastest.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape, double fill = 0.0);
  Tensor(Shape shape, std::vector<double> values);

  const Shape& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t dim(std::size_t axis) const { return shape_.at(axis); }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }
  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }
  std::vector<double>& storage() { return values_; }

  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }

  void fill(double v);
  void reshape(Shape shape);
  Tensor reshaped(Shape shape) const;

  bool all_finite() const;
  std::string shape_string() const;

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  Shape shape_;
  std::vector<double> values_;
};

std::size_t shape_size(const Shape& shape);
std::string to_string(const Shape& shape);

/// Throws DataError naming `what` and both shapes when they differ.
void require_shape(const Tensor& t, const Shape& expected, const std::string& what);

using MatrixRM = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatMap = Eigen::Map<MatrixRM>;
using ConstMatMap = Eigen::Map<const MatrixRM>;

/// Views a tensor as a (rows, size/rows) row-major matrix.
inline MatMap as_matrix(Tensor& t, std::size_t rows) {
  return MatMap(t.data(), static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(t.size() / rows));
}
inline ConstMatMap as_matrix(const Tensor& t, std::size_t rows) {
  return ConstMatMap(t.data(), static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(t.size() / rows));
}

/// A named weight with its gradient accumulator.
struct Parameter {
  std::string name;
  Tensor value;
  Tensor grad;
  bool trainable = true;

  Parameter() = default;
  Parameter(std::string n, Shape shape, bool is_trainable = true)
      : name(std::move(n)), value(shape), grad(is_trainable ? shape : Shape{}), trainable(is_trainable) {}

  void zero_grad() {
    if (trainable) grad.fill(0.0);
  }
};

enum class Mode { train, infer };

}  // namespace vluc::nn
