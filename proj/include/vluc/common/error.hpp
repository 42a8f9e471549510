#pragma once

#include <stdexcept>
#include <string>

namespace vluc {

/// Malformed or missing input data: bad files, inconsistent shapes, too-short series.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// NaN/Inf during training or gradient-check failure.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad configuration or command-line usage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vluc
