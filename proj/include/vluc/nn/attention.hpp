#pragma once

#include <string>
#include <vector>

#include "vluc/nn/init.hpp"
#include "vluc/nn/tensor.hpp"

namespace vluc::nn {

/// Temporal attention over a state sequence (B, L, H, W, C) -> (B, H, W, C):
///
///   z_i     = tanh(w . flatten(h_i) + b)      one scalar per step
///   alpha   = softmax(z) over the L steps
///   h_att   = sum_i alpha_i * h_i
///
/// The scorer w (H*W*C) and b are shared across steps.
class AttentionBlock {
 public:
  AttentionBlock(std::string name, std::size_t features, Initializer& init);

  Tensor forward(const Tensor& states);
  Tensor backward(const Tensor& grad_output);

  /// Softmax weights from the last forward, shape (B, L).
  const Tensor& weights() const { return alpha_; }

  std::vector<Parameter*> parameters() { return {&scorer_, &bias_}; }
  Parameter& scorer() { return scorer_; }
  Parameter& bias() { return bias_; }

 private:
  std::string name_;
  std::size_t features_;
  Parameter scorer_;  // (features, 1)
  Parameter bias_;    // (1)

  bool cached_ = false;
  Tensor states_;
  Tensor score_;  // z, (B, L)
  Tensor alpha_;  // (B, L)
};

}  // namespace vluc::nn
