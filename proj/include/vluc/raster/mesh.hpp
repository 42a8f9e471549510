#pragma once

#include <cstdint>
#include <optional>

namespace vluc::raster {

/// Regular lat/lon partition of a bounding box. Row 0 is the southernmost
/// row (starting at lat_min), column 0 the westernmost (starting at lon_min).
/// Cells are half-open: [edge, edge + step).
struct MeshSpec {
  double lon_min = 0.0;
  double lon_max = 0.0;
  double lat_min = 0.0;
  double lat_max = 0.0;
  double d_lon = 0.0;
  double d_lat = 0.0;
  std::int32_t rows = 0;  // H
  std::int32_t cols = 0;  // W
  std::int32_t frame_interval = 1800;  // seconds
  std::int32_t steps_per_day = 48;

  /// Derives rows/cols/steps_per_day and validates.
  static MeshSpec make(double lon_min, double lon_max, double lat_min, double lat_max, double d_lon, double d_lat,
                       std::int32_t frame_interval);

  /// Throws DataError if any invariant is violated.
  void validate() const;

  std::int32_t cells() const { return rows * cols; }
  double row_edge(std::int32_t row) const { return lat_min + row * d_lat; }
  double col_edge(std::int32_t col) const { return lon_min + col * d_lon; }
};

/// 0.005 deg lon x 0.004 deg lat (about 450 m x 450 m), 30-minute frames.
MeshSpec tokyo_mesh();
MeshSpec osaka_mesh();

struct Cell {
  std::int32_t row = 0;
  std::int32_t col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

std::optional<Cell> grid_of(double lat, double lon, const MeshSpec& mesh);

}  // namespace vluc::raster
