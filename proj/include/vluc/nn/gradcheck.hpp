#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "vluc/nn/tensor.hpp"

namespace vluc::nn {

struct GradCheckOptions {
  /// 0 checks every entry; otherwise a seeded sample of this many per tensor.
  std::size_t max_entries_per_param = 0;
  /// Perturbation is relative_step * max(1, |theta|).
  double relative_step = 1e-5;
  /// error = |a - n| / max(|a|, |n|, floor * max(1, |loss|)). Central
  /// differences carry roundoff near eps * |loss| / step, so gradients much
  /// smaller than that cannot be compared relatively.
  double floor = 1e-5;
  std::uint64_t seed = 0;
};

struct GradCheckReport {
  double max_rel_error = 0.0;
  std::string worst_param;
  std::size_t worst_index = 0;
  double worst_analytic = 0.0;
  double worst_numeric = 0.0;
  std::size_t checked = 0;
};

/// Central finite-difference check of analytic gradients.
///
/// `evaluate(with_grad)` must run a full forward pass and return the scalar
/// loss; when with_grad is true it must also zero the gradients of `params`
/// and back-propagate into them. Only trainable parameters are checked.
GradCheckReport gradcheck(std::span<Parameter* const> params, const std::function<double(bool)>& evaluate,
                          const GradCheckOptions& options = {});

}  // namespace vluc::nn
