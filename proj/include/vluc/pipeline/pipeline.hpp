#pragma once

// Stages of an experiment. Each reads the previous stage's files from the
// experiment's output directory and writes its own:
//
//   synth      trajectories.csv
//   calibrate  calibrated.csv
//   rasterize  density.vluc, flow.vluc
//   export     <kind>_grid.csv
//   train      <run>.ckpt, <run>.index, <run>_history.csv
//   evaluate   metrics.csv, case_study.csv, efficiency.csv
//   report     report.md (from the CSVs only)
//
// A run name is the model kind, with "_r<i>" appended for repeats i >= 1.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "vluc/eval/efficiency.hpp"
#include "vluc/eval/metrics.hpp"
#include "vluc/models/trainer.hpp"
#include "vluc/pipeline/experiment.hpp"
#include "vluc/raster/video.hpp"

namespace vluc::pipeline {

struct CalibrateSummary {
  std::size_t parsed = 0;
  std::size_t malformed = 0;
  std::size_t kept = 0;
  std::size_t trajectories = 0;
};

std::filesystem::path run_synth(const Experiment& e);
CalibrateSummary run_calibrate(const Experiment& e, std::ostream* log = nullptr);
void run_rasterize(const Experiment& e);
std::filesystem::path run_export(const Experiment& e, const std::string& kind, std::int32_t channel);

std::string run_name(const std::string& kind, int repeat);

struct TrainOutcome {
  std::string run;
  models::TrainResult result;
  eval::EfficiencyReport efficiency;
};

/// Trains every repeat of `kind`.
std::vector<TrainOutcome> run_train(const Experiment& e, const std::string& kind, std::ostream* log = nullptr);

struct EvalOutcome {
  std::vector<eval::MetricsRow> metrics;
  std::vector<eval::EfficiencyReport> efficiency;
};

/// Baselines plus every trained run of each kind in e.eval_models.
EvalOutcome run_evaluate(const Experiment& e);

void run_report(const Experiment& e);

/// synth (if the trajectory file is absent), calibrate, rasterize, then train
/// and evaluate every model in e.eval_models.
EvalOutcome run_all(const Experiment& e, std::ostream* log = nullptr);

}  // namespace vluc::pipeline
