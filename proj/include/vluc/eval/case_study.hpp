#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "vluc/dataset/calendar.hpp"

namespace vluc::eval {

/// Predicted and true frames (original units, each H*W*C values) for test
/// targets at frame indices `t_index`.
struct FrameSeries {
  std::vector<std::int32_t> t_index;
  std::vector<std::vector<double>> predictions;
  std::vector<std::vector<double>> targets;
  std::int32_t rows = 0, cols = 0, channels = 1;
};

struct CaseQuery {
  std::int32_t row = 0;
  std::int32_t col = 0;
  std::int32_t channel = 0;
  std::int32_t time_of_day = 0;  // slot index within the day
  dataset::DayType day_type = dataset::DayType::weekday;
};

/// RMSE over matching frames at one cell. Throws DataError if no frame
/// matches the slot and day type.
double case_study(const FrameSeries& series, const dataset::Calendar& calendar, const CaseQuery& query);

struct CaseRow {
  CaseQuery query;
  std::string time;  // "HH:MM"
  double rmse = 0.0;
};

/// `cell_row,cell_col,day_type,time,rmse`.
void write_case_csv(std::ostream& out, std::span<const CaseRow> rows);

}  // namespace vluc::eval
