#pragma once

// Parameter-free tensor plumbing with explicit adjoints.

#include <span>
#include <vector>

#include "vluc/nn/tensor.hpp"

namespace vluc::nn {

/// Concatenates tensors along the last axis; all leading dims must agree.
Tensor concat_channels(std::span<const Tensor* const> parts);
/// Adjoint of concat_channels.
std::vector<Tensor> split_channels(const Tensor& grad, std::span<const std::size_t> widths);

/// (B, L, ...) -> (B, ...) at step L-1.
Tensor last_step(const Tensor& sequence);
/// Adjoint of last_step: zeros everywhere except step L-1.
Tensor last_step_backward(const Tensor& grad, const Shape& sequence_shape);

/// L tensors (B, ...) -> (B, L, ...).
Tensor stack_steps(std::span<const Tensor* const> steps);
/// Adjoint of stack_steps.
std::vector<Tensor> unstack_steps(const Tensor& grad);

/// (B, L, H, W, C) -> (B, H, W, L*C), channels of step 0 first.
Tensor fold_steps_into_channels(const Tensor& sequence);
Tensor unfold_channels_into_steps(const Tensor& grad, const Shape& sequence_shape);

Tensor relu(const Tensor& x);
/// Uses the forward output as mask.
Tensor relu_backward(const Tensor& grad, const Tensor& output);

}  // namespace vluc::nn
