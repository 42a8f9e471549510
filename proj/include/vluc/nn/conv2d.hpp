#pragma once

#include <string>
#include <vector>

#include "vluc/nn/im2col.hpp"
#include "vluc/nn/init.hpp"
#include "vluc/nn/tensor.hpp"

namespace vluc::nn {

enum class Activation { none, relu };

/// Same-padded, stride-1 2D convolution (cross-correlation) on (B, H, W, C).
/// Kernel layout (kh, kw, in, out); parameters kh*kw*in*out + out.
class Conv2D {
 public:
  Conv2D(std::string name, std::size_t kh, std::size_t kw, std::size_t in_channels, std::size_t out_channels,
         Activation activation, Initializer& init);

  Tensor forward(const Tensor& input);
  /// Accumulates kernel/bias gradients and returns d(loss)/d(input).
  Tensor backward(const Tensor& grad_output);

  std::vector<Parameter*> parameters() { return {&kernel_, &bias_}; }
  Parameter& kernel() { return kernel_; }
  Parameter& bias() { return bias_; }
  std::size_t in_channels() const { return in_; }
  std::size_t out_channels() const { return out_; }

 private:
  std::string name_;
  std::size_t kh_, kw_, in_, out_;
  Activation activation_;
  Parameter kernel_;
  Parameter bias_;

  bool cached_ = false;
  ImageDims dims_;
  MatrixRM patches_;
  Tensor output_;
};

}  // namespace vluc::nn
