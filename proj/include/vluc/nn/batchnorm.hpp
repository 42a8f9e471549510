#pragma once

#include <string>
#include <vector>

#include "vluc/nn/tensor.hpp"

namespace vluc::nn {

/// Per-channel batch normalization over every axis except the last.
///
/// train: y = scale * (x - mean_B) / sqrt(var_B + eps) + shift, with biased
///        batch variance; running stats move as r = m*r + (1-m)*batch.
/// infer: the same with running_mean / running_var.
class BatchNorm {
 public:
  static constexpr double kDefaultMomentum = 0.99;
  static constexpr double kDefaultEpsilon = 1e-3;

  BatchNorm(std::string name, std::size_t channels, double momentum = kDefaultMomentum,
            double epsilon = kDefaultEpsilon);

  Tensor forward(const Tensor& input, Mode mode);
  Tensor backward(const Tensor& grad_output);

  std::vector<Parameter*> parameters() { return {&scale_, &shift_, &running_mean_, &running_var_}; }
  Parameter& scale() { return scale_; }
  Parameter& shift() { return shift_; }
  Parameter& running_mean() { return running_mean_; }
  Parameter& running_var() { return running_var_; }
  double epsilon() const { return epsilon_; }

 private:
  std::string name_;
  std::size_t channels_;
  double momentum_;
  double epsilon_;
  Parameter scale_;
  Parameter shift_;
  Parameter running_mean_;
  Parameter running_var_;

  bool cached_ = false;
  Mode mode_ = Mode::train;
  Shape shape_;
  MatrixRM normalized_;            // (N, C)
  Eigen::RowVectorXd inv_std_;     // (C)
};

}  // namespace vluc::nn
