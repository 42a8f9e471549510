#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vluc/models/batch.hpp"
#include "vluc/nn/tensor.hpp"

namespace vluc::models {

struct ModelConfig {
  std::string kind = "convlstm";  // cnn | convlstm | multitask_df | vluc_plain | vluc_pyramid
  std::size_t channels = 1;       // C of the primary task
  std::size_t aux_channels = 2;   // C of the second task (multitask only)
  std::size_t l_c = 6;
  std::size_t filters = 32;
  std::size_t kernel = 3;
  std::size_t rows = 16;
  std::size_t cols = 16;
  double lambda = 0.3;            // multitask weight of the first task
  std::size_t meta_size = 56;     // steps_per_day + 8
  std::uint64_t seed = 0;

  /// Throws UsageError on out-of-range values.
  void validate() const;
};

/// A trainable next-frame predictor. forward() returns one prediction per
/// task, each (B, H, W, C); backward() takes dLoss/dPrediction per task and
/// accumulates into parameter gradients.
class Model {
 public:
  virtual ~Model() = default;

  virtual std::string name() const = 0;
  virtual BatchNeeds needs() const = 0;
  virtual std::vector<nn::Tensor> forward(const Batch& batch, nn::Mode mode) = 0;
  virtual void backward(const std::vector<nn::Tensor>& grads) = 0;
  virtual std::vector<nn::Parameter*> parameters() = 0;
  /// Loss weight per task; the objective is sum_k w_k * MSE_k.
  virtual std::vector<double> task_weights() const { return {1.0}; }
};

struct ParamCounts {
  std::int64_t trainable = 0;
  std::int64_t non_trainable = 0;
  std::int64_t total() const { return trainable + non_trainable; }
};

ParamCounts count_params(Model& model);

}  // namespace vluc::models
