#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "vluc/common/civil_time.hpp"
#include "vluc/raster/video.hpp"

namespace vluc::dataset {

enum class DayType { weekday, weekend };

std::string to_string(DayType type);

/// Maps frame indices of a video to calendar attributes.
struct Calendar {
  std::int64_t start_timestamp = 0;
  std::int32_t frame_interval = 1800;
  std::set<std::int64_t> holidays;  // day numbers

  static Calendar of(const raster::VideoTensor& video, std::set<std::int64_t> holidays = {});

  std::int32_t steps_per_day() const { return static_cast<std::int32_t>(kSecondsPerDay / frame_interval); }
  std::int64_t timestamp(std::int64_t t) const { return start_timestamp + t * frame_interval; }
  std::int64_t day(std::int64_t t) const;
  std::int32_t time_of_day(std::int64_t t) const;
  /// Monday = 0.
  int weekday(std::int64_t t) const;
  bool holiday(std::int64_t t) const;
  /// Mon-Fri and not a holiday.
  DayType day_type(std::int64_t t) const;
};

/// Length of an encoded metadata vector: steps_per_day + 7 + 1.
std::size_t meta_size(std::int32_t steps_per_day);

/// One-hot time of day, one-hot day of week (Mon = 0), holiday flag.
std::vector<double> encode_meta(std::int64_t t, const Calendar& calendar);

}  // namespace vluc::dataset
