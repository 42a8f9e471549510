#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vluc/dataset/calendar.hpp"
#include "vluc/dataset/samples.hpp"
#include "vluc/dataset/scaler.hpp"
#include "vluc/nn/tensor.hpp"
#include "vluc/raster/video.hpp"

namespace vluc::models {

/// Model inputs for a group of samples. Frame tensors are (B, L, H, W, C),
/// metadata (B, L, D), targets (B, H, W, C) with one entry per task.
struct Batch {
  nn::Tensor closeness;
  nn::Tensor period;
  nn::Tensor trend;
  nn::Tensor meta_closeness;
  nn::Tensor meta_period;
  nn::Tensor meta_trend;
  /// Closeness window of the second task's video (multitask models only).
  nn::Tensor aux_closeness;
  std::vector<nn::Tensor> targets;
  std::vector<std::int32_t> t_index;

  std::size_t size() const { return t_index.size(); }
};

/// What a model reads from a batch.
struct BatchNeeds {
  bool period_trend = false;
  bool meta = false;
  bool aux = false;
};

struct TaskVideo {
  const raster::VideoTensor* video = nullptr;
  dataset::Scaler scaler;
};

/// Videos a batch is cut from. `aux` must share T, H, W with `primary`.
struct DataSource {
  TaskVideo primary;
  std::optional<TaskVideo> aux;
  dataset::Calendar calendar;
};

Batch make_batch(const DataSource& source, std::span<const dataset::Sample> samples, const BatchNeeds& needs);

}  // namespace vluc::models
