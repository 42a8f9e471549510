#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "vluc/models/model.hpp"
#include "vluc/models/trainer.hpp"

namespace vluc::eval {

struct EfficiencyReport {
  std::string model;
  models::ParamCounts params;
  double seconds_per_epoch = 0.0;
  int epochs_to_converge = 0;
};

/// Parameter counts from the model; mean epoch seconds and the epoch of best
/// validation MSE from the history.
EfficiencyReport efficiency(models::Model& model, const std::vector<models::EpochRecord>& history);

/// `model,trainable,non_trainable,total,seconds_per_epoch,epochs_to_converge`.
void write_efficiency_csv(std::ostream& out, std::span<const EfficiencyReport> rows);

}  // namespace vluc::eval
