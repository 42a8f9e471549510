#pragma once

// Three-branch attention network over Closeness, Period and Trend windows.
//
// Per branch: the metadata vector of each frame goes through a linear Dense
// layer to H*W values, reshaped into one extra channel and concatenated with
// the frame. Two ConvLSTM layers follow; the pyramid variant concatenates the
// first layer's hidden sequence with the second's. A temporal attention block
// reduces each branch to one state, a second attention block fuses the three
// branch states, and a 3x3 Conv with ReLU produces the frame.

#include <array>

#include "vluc/models/model.hpp"
#include "vluc/nn/attention.hpp"
#include "vluc/nn/conv2d.hpp"
#include "vluc/nn/convlstm.hpp"
#include "vluc/nn/dense.hpp"
#include "vluc/nn/init.hpp"

namespace vluc::models {

class VlucNet final : public Model {
 public:
  VlucNet(const ModelConfig& config, bool pyramid);

  std::string name() const override { return pyramid_ ? "vluc_pyramid" : "vluc_plain"; }
  BatchNeeds needs() const override { return {.period_trend = true, .meta = true}; }
  std::vector<nn::Tensor> forward(const Batch& batch, nn::Mode mode) override;
  void backward(const std::vector<nn::Tensor>& grads) override;
  std::vector<nn::Parameter*> parameters() override;

  struct BranchNet {
    nn::Dense meta;
    nn::ConvLSTM lower;
    nn::ConvLSTM upper;
    nn::AttentionBlock attention;
    nn::Shape meta_shape;
  };

  BranchNet& branch(std::size_t i) { return branches_[i]; }
  nn::AttentionBlock& fusion() { return fusion_; }

 private:
  BranchNet make_branch(const ModelConfig& config, std::size_t index);
  std::size_t state_width() const { return pyramid_ ? 2 * filters_ : filters_; }
  nn::Tensor branch_forward(BranchNet& br, const nn::Tensor& frames, const nn::Tensor& meta);
  void branch_backward(BranchNet& br, const nn::Tensor& grad_state);

  bool pyramid_;
  std::size_t channels_, rows_, cols_, filters_;
  nn::Initializer init_;
  std::array<BranchNet, 3> branches_;
  nn::AttentionBlock fusion_;
  nn::Conv2D head_;
};

}  // namespace vluc::models
