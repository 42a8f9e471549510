#pragma once

#include <cstdint>
#include <random>

#include "vluc/nn/tensor.hpp"

namespace vluc::nn {

/// Seeded weight initializer. Layers draw from it in construction order, so
/// a model built twice from the same seed has identical weights.
class Initializer {
 public:
  explicit Initializer(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in +-sqrt(6 / (fan_in + fan_out)).
  void glorot_uniform(Tensor& t, std::size_t fan_in, std::size_t fan_out);
  void uniform(Tensor& t, double lo, double hi);

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace vluc::nn
