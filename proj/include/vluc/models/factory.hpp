#pragma once

#include <memory>
#include <string>
#include <vector>

#include "vluc/models/model.hpp"

namespace vluc::models {

/// Names accepted by build_model.
const std::vector<std::string>& model_kinds();

/// Throws UsageError for an unknown kind.
std::unique_ptr<Model> build_model(const ModelConfig& config);

}  // namespace vluc::models
