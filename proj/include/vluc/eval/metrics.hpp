#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vluc/dataset/scaler.hpp"

namespace vluc::eval {

/// Error metrics in original units. MAPE is a ratio (1.0 = 100%) averaged
/// over elements whose ground truth is nonzero; it is nullopt when there are
/// none.
struct MetricsReport {
  double mse = 0.0;
  double rmse = 0.0;
  double mae = 0.0;
  std::optional<double> mape;
  std::int64_t n = 0;
  std::int64_t mape_support = 0;
};

struct EvalOptions {
  /// When set, only elements whose ground truth is >= threshold count.
  std::optional<double> threshold;
};

/// Metrics on values already in original units.
MetricsReport evaluate(std::span<const double> predictions, std::span<const double> targets,
                       const EvalOptions& options = {});

/// Inverse-scales both arrays first.
MetricsReport evaluate(std::span<const double> predictions, std::span<const double> targets,
                       const dataset::Scaler& scaler, const EvalOptions& options = {});

std::vector<double> inverse_scale(std::span<const double> values, const dataset::Scaler& scaler);

struct MetricsRow {
  std::string model;
  std::string dataset;
  MetricsReport report;
};

/// `model,dataset,mse,rmse,mae,mape,mape_support`; an undefined MAPE is
/// written as "nan".
void write_metrics_csv(std::ostream& out, std::span<const MetricsRow> rows);

}  // namespace vluc::eval
