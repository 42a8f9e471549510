#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vluc/nn/gradcheck.hpp"

namespace vluc::pipeline {

struct GradCheckResult {
  std::string subject;
  nn::GradCheckReport report;
  bool passed = false;
};

inline constexpr double kGradCheckTolerance = 1e-4;

/// Finite-difference checks of every layer type (including the gradient
/// with respect to the layer input) on small random shapes.
std::vector<GradCheckResult> check_layers(std::uint64_t seed);

/// Finite-difference checks of each assembled model at H = W = 4, l_c = 3.
/// `entries_per_param` bounds the sampled entries per weight tensor.
std::vector<GradCheckResult> check_models(std::uint64_t seed, std::size_t entries_per_param = 24);

}  // namespace vluc::pipeline
