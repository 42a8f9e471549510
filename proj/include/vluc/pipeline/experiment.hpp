#pragma once

// Experiment settings read from a config file. Every key is optional.
//
//   seed = 7                       top level
//   out = "runs/demo"
//   threads = 1
//   [data]      trajectories, task ("density" | "flow"), holidays = ["2017-05-03"]
//   [mesh]      lon_min, lon_max, lat_min, lat_max, d_lon, d_lat, frame_interval
//               (or rows/cols to use the built-in synthetic mesh)
//   [calibrate] interval, max_speed
//   [raster]    k, start_date, days
//   [window]    l_c, T_c, T_p, T_t
//   [model]     kind, filters, kernel, lambda
//   [train]     batch_size, learning_rate, max_epochs, patience, repeats, train_only_scaler
//   [eval]      models, threshold, case_cells = ["8:8"], case_times = ["08:00"]
//   [synth]     objects, days, start_date, pattern, records_per_day, ...

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vluc/common/config.hpp"
#include "vluc/dataset/samples.hpp"
#include "vluc/models/model.hpp"
#include "vluc/models/trainer.hpp"
#include "vluc/raster/mesh.hpp"
#include "vluc/synth/generator.hpp"

namespace vluc::pipeline {

struct Experiment {
  std::uint64_t seed = 1;
  std::filesystem::path out_dir = "vluc_out";
  int threads = 1;

  std::filesystem::path trajectories;  // defaults to <out>/trajectories.csv
  std::string task = "density";
  std::set<std::int64_t> holidays;

  raster::MeshSpec mesh;
  std::int32_t calibrate_interval = 600;
  double max_speed = 50.0;
  float k = 10.0f;
  std::optional<std::int64_t> start_day;
  std::optional<std::int32_t> days;

  dataset::WindowSpec window;
  models::ModelConfig model;
  models::TrainConfig train;
  int repeats = 1;
  bool train_only_scaler = false;

  std::vector<std::string> eval_models;
  std::optional<double> threshold;
  std::vector<std::pair<std::int32_t, std::int32_t>> case_cells;
  std::vector<std::int32_t> case_times;  // seconds of day

  synth::SynthConfig synth;

  std::filesystem::path path(const std::string& name) const { return out_dir / name; }
  std::filesystem::path trajectory_path() const { return trajectories.empty() ? path("trajectories.csv") : trajectories; }
  std::filesystem::path video_path(const std::string& kind) const { return path(kind + ".vluc"); }
};

/// Reads settings; throws UsageError on malformed values.
Experiment load_experiment(const Config& config);

}  // namespace vluc::pipeline
