#pragma once

// Aggregation of calibrated trajectories into urban video tensors.
//
// Density:  d_t(m)   = |{o : cell_t(o) = m}|
// Inflow:   in_t(m)  = |{o : cell_{t-1}(o) != m  and  cell_t(o) = m}|
// Outflow:  out_t(m) = |{o : cell_{t-1}(o) = m   and  cell_t(o) != m}|
//
// An object that is absent (no calibrated slot) or outside the mesh has no
// cell, which compares unequal to every cell.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vluc/ingest/calibrate.hpp"
#include "vluc/raster/mesh.hpp"

namespace vluc::raster {

enum class VideoKind { density, flow };

/// (T, H, W, C) frame stack, row-major with C fastest.
struct VideoTensor {
  std::int32_t frames = 0;    // T
  std::int32_t rows = 0;      // H
  std::int32_t cols = 0;      // W
  std::int32_t channels = 0;  // C
  std::int64_t start_timestamp = 0;
  std::int32_t frame_interval = 0;
  std::vector<std::string> channel_labels;
  std::vector<float> data;

  VideoTensor() = default;
  VideoTensor(std::int32_t t, std::int32_t h, std::int32_t w, std::int32_t c, std::int64_t start,
              std::int32_t interval);

  std::size_t frame_size() const { return static_cast<std::size_t>(rows) * cols * channels; }
  std::size_t index(std::int32_t t, std::int32_t r, std::int32_t c, std::int32_t ch) const {
    return ((static_cast<std::size_t>(t) * rows + r) * cols + c) * channels + ch;
  }
  float& at(std::int32_t t, std::int32_t r, std::int32_t c, std::int32_t ch) { return data[index(t, r, c, ch)]; }
  float at(std::int32_t t, std::int32_t r, std::int32_t c, std::int32_t ch) const { return data[index(t, r, c, ch)]; }
  std::span<const float> frame(std::int32_t t) const { return {data.data() + t * frame_size(), frame_size()}; }
  std::span<float> frame(std::int32_t t) { return {data.data() + t * frame_size(), frame_size()}; }
  std::int64_t frame_timestamp(std::int32_t t) const { return start_timestamp + std::int64_t{t} * frame_interval; }
};

std::vector<std::string> default_labels(std::int32_t channels);

using Positions = std::span<const std::optional<Cell>>;

/// (H, W, 1) counts of objects per cell.
std::vector<float> density_frame(Positions positions, std::int32_t rows, std::int32_t cols);

/// (H, W, 2) inflow (channel 0) and outflow (channel 1). prev[i] and curr[i]
/// refer to the same object.
std::vector<float> flow_frame(Positions prev, Positions curr, std::int32_t rows, std::int32_t cols);

struct VideoRange {
  std::int64_t start_day = 0;  // first day (days since epoch); frame 0 is 00:00 of this day
  std::int32_t days = 1;
};

/// Builds T = days * steps_per_day frames. Each frame samples the calibrated
/// slot at its timestamp. Flow frame 0 is all zero. Throws DataError if a
/// trajectory's interval does not divide mesh.frame_interval. `threads`
/// partitions frames across workers; output is identical for any value.
VideoTensor build_video(std::span<const ingest::CalibratedTrajectory> trajectories, const MeshSpec& mesh,
                        VideoKind kind, const VideoRange& range, int threads = 1);

/// Replaces every value strictly below k with 0.
VideoTensor k_anonymize(VideoTensor video, float k);

}  // namespace vluc::raster
