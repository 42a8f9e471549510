#pragma once

#include "vluc/models/model.hpp"
#include "vluc/nn/batchnorm.hpp"
#include "vluc/nn/convlstm.hpp"

namespace vluc::models {

/// ConvLSTM(f)-BN-ConvLSTM(f)-BN-ConvLSTM(f)-BN-ConvLSTM(C) over the
/// closeness sequence; the last hidden state through ReLU is the prediction.
class ConvLstmModel final : public Model {
 public:
  explicit ConvLstmModel(const ModelConfig& config);

  std::string name() const override { return "convlstm"; }
  BatchNeeds needs() const override { return {}; }
  std::vector<nn::Tensor> forward(const Batch& batch, nn::Mode mode) override;
  void backward(const std::vector<nn::Tensor>& grads) override;
  std::vector<nn::Parameter*> parameters() override;

 private:
  std::vector<nn::ConvLSTM> cells_;
  std::vector<nn::BatchNorm> norms_;
  nn::Shape last_shape_;
  nn::Tensor output_;
};

}  // namespace vluc::models
