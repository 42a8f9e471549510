#pragma once

// Supervised samples over a video. A Sample only records frame indices; the
// tensors are materialized on demand so large videos are never duplicated.
//
// For target t the windows are
//   closeness [t - T_c - l_c, t - T_c - 1]
//   period    [t - T_p - l_c, t - T_p - 1]
//   trend     [t - T_t - l_c, t - T_t - 1]

#include <cstdint>
#include <span>
#include <vector>

#include "vluc/dataset/calendar.hpp"
#include "vluc/dataset/scaler.hpp"
#include "vluc/nn/tensor.hpp"
#include "vluc/raster/video.hpp"

namespace vluc::dataset {

struct WindowSpec {
  std::int32_t l_c = 6;
  std::int32_t T_c = 0;
  std::int32_t T_p = 48;
  std::int32_t T_t = 336;

  /// Throws UsageError unless l_c >= 1 and 0 = T_c < T_p < T_t.
  void validate() const;
  std::int32_t first_target() const { return T_t + l_c; }
  /// Smallest video length that yields one sample.
  std::int32_t min_frames() const { return first_target() + 1; }
};

enum class Branch { closeness, period, trend };

struct Sample {
  std::int32_t t_index = 0;
  std::vector<std::int32_t> closeness;
  std::vector<std::int32_t> period;
  std::vector<std::int32_t> trend;

  const std::vector<std::int32_t>& window(Branch b) const;
};

/// One sample per t in [T_t + l_c, frames - 1]. Throws DataError naming the
/// minimum length when the video is too short.
std::vector<Sample> make_samples(std::int32_t frames, const WindowSpec& spec);

/// Scaled frames at `indices` stacked as (L, H, W, C).
nn::Tensor gather_frames(const raster::VideoTensor& video, const Scaler& scaler, std::span<const std::int32_t> indices);

/// Scaled single frame (H, W, C).
nn::Tensor gather_frame(const raster::VideoTensor& video, const Scaler& scaler, std::int32_t t);

/// Metadata vectors for `indices`, (L, D).
nn::Tensor gather_meta(const Calendar& calendar, std::span<const std::int32_t> indices);

struct Split {
  std::vector<Sample> train;
  std::vector<Sample> val;
  std::vector<Sample> test;
};

/// Boundaries (sizes rounded down) at 64% and 80%; chronological order is
/// kept. Needs at least 5 samples.
Split split(std::span<const Sample> samples);

struct SplitSizes {
  std::size_t train = 0, val = 0, test = 0;
};
SplitSizes split_sizes(std::size_t n);

}  // namespace vluc::dataset
