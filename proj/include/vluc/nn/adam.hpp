#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vluc/nn/tensor.hpp"

namespace vluc::nn {

struct AdamConfig {
  double learning_rate = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// Adam with bias correction:
///   m = b1*m + (1-b1)*g,  v = b2*v + (1-b2)*g^2
///   theta -= lr * (m / (1-b1^t)) / (sqrt(v / (1-b2^t)) + eps)
/// Non-trainable parameters are skipped.
class Adam {
 public:
  explicit Adam(AdamConfig config = {}) : config_(config) {}

  /// Throws NumericalError if a gradient or updated value is not finite.
  void step(std::span<Parameter* const> params);

  std::int64_t steps() const { return step_; }
  const AdamConfig& config() const { return config_; }
  const std::vector<Tensor>& first_moments() const { return m_; }
  const std::vector<Tensor>& second_moments() const { return v_; }

 private:
  AdamConfig config_;
  std::int64_t step_ = 0;
  std::vector<Tensor> m_;
  std::vector<Tensor> v_;
};

}  // namespace vluc::nn
