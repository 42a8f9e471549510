#pragma once

// Raw GPS trajectory records: parsing, writing, and cleaning.
//
// Trajectory-CSV format (UTF-8, LF line endings):
//
//   object_id,timestamp,lat,lon
//   u1,2017-04-01 09:14:10,35.681,139.767

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace vluc::ingest {

struct RawRecord {
  std::string object_id;
  std::int64_t timestamp = 0;  // naive local seconds since epoch
  double lat = 0.0;
  double lon = 0.0;

  friend bool operator==(const RawRecord&, const RawRecord&) = default;
};

struct ParseDiagnostic {
  std::size_t line = 0;  // 1-based, header is line 1
  std::string message;
};

struct ParseResult {
  std::vector<RawRecord> records;
  std::vector<ParseDiagnostic> diagnostics;
};

inline constexpr const char* kTrajectoryHeader = "object_id,timestamp,lat,lon";

/// Reads trajectory-CSV. Malformed lines are skipped and reported, one
/// diagnostic per line. Throws DataError if the stream is unreadable or the
/// header is missing.
ParseResult parse_trajectories(std::istream& in);

void write_trajectories(std::ostream& out, std::span<const RawRecord> records);

/// Canonical order: (object_id, timestamp), stable.
void sort_records(std::vector<RawRecord>& records);

/// Great-circle distance in metres (mean Earth radius 6371008.8 m).
double haversine_m(double lat1, double lon1, double lat2, double lon2);

inline constexpr double kDefaultMaxSpeed = 50.0;  // m/s

/// Sorts by (object, timestamp), drops repeated (object, timestamp) pairs
/// keeping the first, then drops any record whose straight-line speed from
/// the last kept record of the same object exceeds max_speed.
std::vector<RawRecord> clean(std::vector<RawRecord> records, double max_speed = kDefaultMaxSpeed);

}  // namespace vluc::ingest
