#pragma once

#include <string>
#include <vector>

#include "vluc/nn/im2col.hpp"
#include "vluc/nn/init.hpp"
#include "vluc/nn/tensor.hpp"

namespace vluc::nn {

/// Convolutional LSTM over (B, L, H, W, Cin) sequences, no peepholes.
///
///   [z_i z_f z_g z_o] = conv(concat(x_t, h_{t-1}), K) + b
///   i, f, o = sigmoid(z_i, z_f, z_o);  g = tanh(z_g)
///   c_t = f * c_{t-1} + i * g;  h_t = o * tanh(c_t)
///
/// K has shape (kh, kw, Cin + hid, 4*hid) with gate blocks in order i, f, g, o.
/// Parameters: 4 * (kh*kw*(Cin + hid)*hid + hid). Forget bias starts at 1.
class ConvLSTM {
 public:
  ConvLSTM(std::string name, std::size_t kh, std::size_t kw, std::size_t in_channels, std::size_t hidden,
           Initializer& init);

  /// Returns the full hidden sequence (B, L, H, W, hid). Initial states are
  /// zero unless given as (B, H, W, hid) tensors.
  Tensor forward(const Tensor& sequence, const Tensor* h0 = nullptr, const Tensor* c0 = nullptr);
  /// Back-propagation through time; returns d(loss)/d(sequence).
  Tensor backward(const Tensor& grad_sequence);

  std::vector<Parameter*> parameters() { return {&kernel_, &bias_}; }
  Parameter& kernel() { return kernel_; }
  Parameter& bias() { return bias_; }
  std::size_t hidden() const { return hid_; }
  std::size_t in_channels() const { return in_; }

 private:
  struct Step {
    MatrixRM patches;  // (BHW, kh*kw*(in+hid))
    MatrixRM gates;    // (BHW, 4*hid) post-activation i, f, g, o
    MatrixRM c_prev;   // (BHW, hid)
    MatrixRM tanh_c;   // (BHW, hid)
  };

  std::string name_;
  std::size_t kh_, kw_, in_, hid_;
  Parameter kernel_;
  Parameter bias_;

  bool cached_ = false;
  Shape input_shape_;
  ImageDims concat_dims_;
  std::vector<Step> steps_;
};

}  // namespace vluc::nn
