#pragma once

#include <cstdint>
#include <optional>

#include "vluc/raster/video.hpp"

namespace vluc::dataset {

/// Min-max scaling to [0, 1] with one (min, max) pair shared by all channels.
struct Scaler {
  double min_value = 0.0;
  double max_value = 1.0;

  /// max == min: everything scales to 0 and inverse() returns min_value.
  bool degenerate() const { return !(max_value > min_value); }
  double scale(double x) const { return degenerate() ? 0.0 : (x - min_value) / (max_value - min_value); }
  double inverse(double y) const { return degenerate() ? min_value : y * (max_value - min_value) + min_value; }
};

/// Fits over the whole tensor, or over frames [0, frame_limit) when given.
Scaler fit_scaler(const raster::VideoTensor& video, std::optional<std::int32_t> frame_limit = std::nullopt);

}  // namespace vluc::dataset
