#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "vluc/dataset/calendar.hpp"
#include "vluc/raster/video.hpp"

namespace vluc::models {

/// Per-cell mean of training frames grouped by (time of day, day type).
/// Works on the original (unscaled) values.
class HistoricalAverage {
 public:
  /// Averages frames [0, frame_limit).
  HistoricalAverage(const raster::VideoTensor& video, const dataset::Calendar& calendar, std::int32_t frame_limit);

  /// Mean frame for the slot and day type of frame t. Throws DataError when
  /// no training frame matches.
  std::vector<double> predict(std::int64_t t) const;
  std::vector<double> predict(std::int32_t time_of_day, dataset::DayType type) const;

 private:
  dataset::Calendar calendar_;
  std::map<std::pair<std::int32_t, dataset::DayType>, std::vector<double>> means_;
};

/// Frame t - steps_per_day. Throws DataError when t < steps_per_day.
std::vector<double> copy_yesterday(const raster::VideoTensor& video, std::int64_t t, std::int32_t steps_per_day);

}  // namespace vluc::models
