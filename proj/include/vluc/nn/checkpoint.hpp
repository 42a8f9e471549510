#pragma once

// Weight checkpoints: one binary file holding a VLUC tensor blob per
// parameter (float32), plus a text index with one `name,shape,offset` line
// per parameter. Shapes are written as dims joined by 'x'; offsets are byte
// positions of each blob in the binary file. Blob headers carry the shape
// right-aligned into (T, H, W, C), padded with leading 1s.

#include <span>
#include <string>

#include "vluc/nn/tensor.hpp"

namespace vluc::nn {

void save_checkpoint(std::span<Parameter* const> params, const std::string& binary_path, const std::string& index_path);

/// Loads values into `params` by name; every parameter must be present with
/// a matching shape. Throws DataError otherwise.
void load_checkpoint(std::span<Parameter* const> params, const std::string& binary_path, const std::string& index_path);

}  // namespace vluc::nn
