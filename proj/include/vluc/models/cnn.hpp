#pragma once

#include "vluc/models/model.hpp"
#include "vluc/nn/batchnorm.hpp"
#include "vluc/nn/conv2d.hpp"

namespace vluc::models {

/// Closeness frames folded into channels (H, W, l_c * C), then
/// Conv-BN-Conv-BN-Conv-BN-Conv(C) with ReLU on the output.
class CnnModel final : public Model {
 public:
  explicit CnnModel(const ModelConfig& config);

  std::string name() const override { return "cnn"; }
  BatchNeeds needs() const override { return {}; }
  std::vector<nn::Tensor> forward(const Batch& batch, nn::Mode mode) override;
  void backward(const std::vector<nn::Tensor>& grads) override;
  std::vector<nn::Parameter*> parameters() override;

 private:
  std::vector<nn::Conv2D> convs_;
  std::vector<nn::BatchNorm> norms_;
  nn::Shape input_shape_;
};

}  // namespace vluc::models
