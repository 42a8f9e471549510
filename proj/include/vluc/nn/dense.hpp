#pragma once

#include <string>
#include <vector>

#include "vluc/nn/conv2d.hpp"
#include "vluc/nn/init.hpp"
#include "vluc/nn/tensor.hpp"

namespace vluc::nn {

/// Fully connected layer: (..., in) -> (..., out). Leading axes are treated
/// as rows.
class Dense {
 public:
  Dense(std::string name, std::size_t in_features, std::size_t out_features, Activation activation,
        Initializer& init);

  Tensor forward(const Tensor& input);
  Tensor backward(const Tensor& grad_output);

  std::vector<Parameter*> parameters() { return {&weight_, &bias_}; }
  Parameter& weight() { return weight_; }
  Parameter& bias() { return bias_; }

 private:
  std::string name_;
  std::size_t in_, out_;
  Activation activation_;
  Parameter weight_;  // (in, out)
  Parameter bias_;    // (out)

  bool cached_ = false;
  Tensor input_;
  Tensor output_;
};

}  // namespace vluc::nn
