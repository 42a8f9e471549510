#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "vluc/dataset/samples.hpp"
#include "vluc/models/batch.hpp"
#include "vluc/models/model.hpp"

namespace vluc::models {

struct TrainConfig {
  std::size_t batch_size = 4;
  double learning_rate = 1e-4;
  int max_epochs = 200;
  int patience = 10;
  std::uint64_t seed = 0;
  /// Stop as soon as an epoch's train loss falls below this (0 disables).
  double target_train_mse = 0.0;

  void validate() const;
};

struct EpochRecord {
  int epoch = 0;  // 1-based
  double train_mse = 0.0;
  double val_mse = 0.0;
  double seconds = 0.0;
};

struct TrainResult {
  std::vector<EpochRecord> history;
  int best_epoch = 0;
  double best_val_mse = 0.0;
  std::int64_t steps = 0;
};

/// Adam on the task-weighted MSE over scaled targets. Samples are shuffled
/// each epoch with a seeded permutation; a short last batch is kept. Stops
/// after `patience` epochs without a validation improvement and leaves the
/// model holding the weights of the best validation epoch. Throws
/// NumericalError if the loss or a gradient becomes non-finite.
TrainResult train(Model& model, const DataSource& source, std::span<const dataset::Sample> train_samples,
                  std::span<const dataset::Sample> val_samples, const TrainConfig& config,
                  const std::function<void(const EpochRecord&)>& on_epoch = {});

/// Task-weighted MSE in inference mode, averaged over samples.
double evaluate_loss(Model& model, const DataSource& source, std::span<const dataset::Sample> samples,
                     std::size_t batch_size);

/// Inference-mode predictions (scaled), one (N, H, W, C) tensor per task.
std::vector<nn::Tensor> predict(Model& model, const DataSource& source, std::span<const dataset::Sample> samples,
                                std::size_t batch_size);

/// Writes `epoch,train_mse,val_mse,seconds`.
void write_history_csv(std::ostream& out, const std::vector<EpochRecord>& history);

}  // namespace vluc::models
