#pragma once

// Naive civil time: timestamps are seconds since 1970-01-01 00:00:00 in the
// data's local clock. No timezone or DST arithmetic is performed.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace vluc {

inline constexpr std::int64_t kSecondsPerDay = 86400;

/// Parses "YYYY-MM-DD HH:MM:SS". Returns nullopt on any format or range error.
std::optional<std::int64_t> parse_timestamp(std::string_view text);

/// Parses "YYYY-MM-DD" into a day number (days since 1970-01-01).
std::optional<std::int64_t> parse_date(std::string_view text);

std::string format_timestamp(std::int64_t seconds);
std::string format_date(std::int64_t day);

/// Floor division, so negative timestamps map to the correct day.
inline std::int64_t day_of(std::int64_t seconds) {
  std::int64_t d = seconds / kSecondsPerDay;
  return (seconds % kSecondsPerDay < 0) ? d - 1 : d;
}

inline std::int64_t second_of_day(std::int64_t seconds) {
  return seconds - day_of(seconds) * kSecondsPerDay;
}

/// Day of week with Monday = 0 ... Sunday = 6.
int weekday_of(std::int64_t day);

}  // namespace vluc
