#pragma once

// VLUC binary tensor, all fields little-endian:
//
//   offset  size  field
//   0       4     magic "VLUC"
//   4       4     u32 format version (1)
//   8       16    u32 T, H, W, C
//   24      8     i64 start_timestamp
//   32      4     u32 frame_interval
//   36      4*N   f32 values, N = T*H*W*C, row-major with C fastest
//
// Grid-CSV export: header `timestamp,row,col,value`, one line per nonzero
// cell per frame. Row 0 is the southern edge, column 0 the western edge.

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "vluc/raster/video.hpp"

namespace vluc::raster {

inline constexpr std::uint32_t kVlucVersion = 1;
inline constexpr std::size_t kVlucHeaderBytes = 36;

struct BlobHeader {
  std::array<std::uint32_t, 4> dims{};  // T, H, W, C
  std::int64_t start_timestamp = 0;
  std::uint32_t frame_interval = 0;

  std::size_t count() const {
    return static_cast<std::size_t>(dims[0]) * dims[1] * dims[2] * dims[3];
  }
};

void write_blob(std::ostream& out, const BlobHeader& header, std::span<const float> values);
/// Throws DataError on bad magic, unsupported version or truncation.
BlobHeader read_blob(std::istream& in, std::vector<float>& values);

void write_vluc(std::ostream& out, const VideoTensor& video);
VideoTensor read_vluc(std::istream& in);

void save_vluc(const std::string& path, const VideoTensor& video);
VideoTensor load_vluc(const std::string& path);

void write_grid_csv(std::ostream& out, const VideoTensor& video, std::int32_t channel = 0);

}  // namespace vluc::raster
