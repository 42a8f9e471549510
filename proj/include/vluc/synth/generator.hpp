#pragma once

// Seeded synthetic trajectories. Objects live near a few home hotspots and
// commute to work hotspots on weekdays; on weekends some make one excursion
// to a leisure hotspot. Each day draws a global departure shift and a
// participation rate, so days differ in ways a calendar average cannot see.
// Records are emitted at irregular times (movement transitions plus random
// extra fixes), with one fix near each end of the day.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "vluc/ingest/trajectory.hpp"
#include "vluc/raster/mesh.hpp"

namespace vluc::synth {

enum class Pattern { commuting, stationary };

struct SynthConfig {
  std::int32_t n_objects = 1000;
  std::int32_t n_days = 28;
  std::int64_t start_day = 17257;  // 2017-04-01
  raster::MeshSpec mesh;
  std::uint64_t seed = 1;
  Pattern pattern = Pattern::commuting;

  std::int32_t home_hotspots = 4;
  std::int32_t work_hotspots = 3;
  std::int32_t leisure_hotspots = 3;
  double home_spread_cells = 1.2;
  double work_spread_cells = 0.8;

  double morning_departure_h = 8.0;
  double evening_departure_h = 18.0;
  double personal_jitter_min = 20.0;  // per-object fixed offset, sd
  double daily_jitter_min = 10.0;     // per-object per-day noise, sd
  double day_shift_min = 45.0;        // shared per-day shift, sd
  double participation_min = 0.55;    // per-day commuting share is uniform in [min, max]
  double participation_max = 1.0;
  double weekend_outing_min = 0.2;
  double weekend_outing_max = 0.7;
  double speed_mps = 8.0;
  double records_per_day = 20.0;

  void validate() const;
};

/// Records sorted by (object_id, timestamp).
std::vector<ingest::RawRecord> generate(const SynthConfig& config);

/// Every object reports a location inside the mesh at every slot of every
/// day (slot spacing `interval`). At each slot an object moves to a random
/// cell with probability `move_probability`.
std::vector<ingest::RawRecord> make_closed_world(const SynthConfig& config, std::int32_t interval,
                                                 double move_probability);

/// A small default mesh of rows x cols cells anchored in central Tokyo.
raster::MeshSpec synth_mesh(std::int32_t rows, std::int32_t cols, std::int32_t frame_interval = 1800);

}  // namespace vluc::synth
