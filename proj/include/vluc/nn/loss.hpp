#pragma once

#include "vluc/nn/tensor.hpp"

namespace vluc::nn {

/// Mean of squared elementwise differences.
double mse(const Tensor& prediction, const Tensor& target);

/// d(weight * mse)/d(prediction) = 2 * weight * (prediction - target) / n.
Tensor mse_grad(const Tensor& prediction, const Tensor& target, double weight = 1.0);

}  // namespace vluc::nn
