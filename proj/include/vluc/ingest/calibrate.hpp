#pragma once

// Constant-rate resampling of per-object, per-day trajectories.
//
// Slots are aligned to multiples of `interval` seconds from 00:00:00. For an
// object-day observed over [first, last], slots from floor(first) to
// ceil(last) (clamped to the day) are emitted. Interior slots are linearly
// interpolated in raw lat/lon between the bracketing observations; the at
// most one slot on each side outside the observed span is clamped to the
// nearest observation. Slots further out are absent.

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "vluc/ingest/trajectory.hpp"

namespace vluc::ingest {

struct LatLon {
  double lat = 0.0;
  double lon = 0.0;
  friend bool operator==(const LatLon&, const LatLon&) = default;
};

struct CalibratedPoint {
  std::int32_t slot = 0;
  double lat = 0.0;
  double lon = 0.0;
};

struct CalibratedTrajectory {
  std::string object_id;
  std::int64_t day = 0;        // days since epoch
  std::int32_t interval = 0;   // seconds between slots
  std::vector<CalibratedPoint> points;  // contiguous, increasing slots

  std::int32_t slots_per_day() const { return static_cast<std::int32_t>(86400 / interval); }
  std::int64_t slot_timestamp(std::int32_t slot) const { return day * 86400 + std::int64_t{slot} * interval; }

  /// Location at `slot`, or nullopt if the slot is outside the emitted span.
  std::optional<LatLon> at(std::int32_t slot) const;
};

/// Calibrates one object-day. `records` must all belong to the same object
/// and day; order does not matter. Throws DataError on an empty input or if
/// `interval` does not divide 86400.
CalibratedTrajectory calibrate(std::span<const RawRecord> records, std::int32_t interval);

/// Groups records by (object, day) and calibrates each group. Output is in
/// canonical (object_id, day) order.
std::vector<CalibratedTrajectory> calibrate_all(std::span<const RawRecord> records, std::int32_t interval);

inline constexpr const char* kCalibratedHeader = "object_id,date,slot,lat,lon";

void write_calibrated(std::ostream& out, std::span<const CalibratedTrajectory> trajectories);

/// Reads the calibrated CSV written by write_calibrated. `interval` is
/// required because the file stores slot indices only.
std::vector<CalibratedTrajectory> read_calibrated(std::istream& in, std::int32_t interval);

}  // namespace vluc::ingest
