#pragma once

#include <cstddef>

#include "vluc/nn/tensor.hpp"

namespace vluc::nn {

struct ImageDims {
  std::size_t batch = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t channels = 0;

  std::size_t pixels() const { return batch * rows * cols; }
};

/// Same-padded, stride-1 patch extraction for an odd kh x kw window.
/// Row (b, y, x) of `patches` holds the window centred at (y, x), ordered
/// (ky, kx, c) to match a (kh, kw, C, out) kernel layout. Out-of-image taps
/// are zero.
void im2col(const double* input, const ImageDims& dims, std::size_t kh, std::size_t kw, MatrixRM& patches);

/// Adjoint of im2col: scatters patch gradients back onto `grad_input`
/// (which is accumulated into, not overwritten).
void col2im(const MatrixRM& grad_patches, const ImageDims& dims, std::size_t kh, std::size_t kw, double* grad_input);

}  // namespace vluc::nn
