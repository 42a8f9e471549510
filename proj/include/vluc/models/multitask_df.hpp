#pragma once

#include "vluc/models/model.hpp"
#include "vluc/nn/batchnorm.hpp"
#include "vluc/nn/convlstm.hpp"
#include "vluc/nn/init.hpp"

namespace vluc::models {

/// Joint density + flow predictor. Separate ConvLSTM encoders per task are
/// concatenated, passed through a shared BN/ConvLSTM trunk, and decoded by
/// one ConvLSTM head per task. Loss: lambda * L_0 + (1 - lambda) * L_1.
class MultitaskDfModel final : public Model {
 public:
  explicit MultitaskDfModel(const ModelConfig& config);

  std::string name() const override { return "multitask_df"; }
  BatchNeeds needs() const override { return {.aux = true}; }
  std::vector<nn::Tensor> forward(const Batch& batch, nn::Mode mode) override;
  void backward(const std::vector<nn::Tensor>& grads) override;
  std::vector<nn::Parameter*> parameters() override;
  std::vector<double> task_weights() const override { return {lambda_, 1.0 - lambda_}; }

 private:
  nn::Initializer init_;
  double lambda_;
  std::size_t filters_;
  nn::ConvLSTM encode_a_, encode_b_;
  nn::BatchNorm norm0_;
  nn::ConvLSTM trunk1_;
  nn::BatchNorm norm1_;
  nn::ConvLSTM trunk2_;
  nn::BatchNorm norm2_;
  nn::ConvLSTM head_a_, head_b_;
  nn::Shape head_a_shape_, head_b_shape_;
  nn::Tensor out_a_, out_b_;
};

}  // namespace vluc::models
