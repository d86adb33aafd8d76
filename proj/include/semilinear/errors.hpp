// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace semilinear {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* code() const noexcept { return "error"; }
};

/// Operands (or a point and a set) live in different dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "dimension_mismatch"; }
};

/// Input violates a documented schema or a domain invariant
/// (negative entry, empty constant set, ragged matrix, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "invalid_input"; }
};

/// A construction exceeded its ResourceLimits. `stage` names the pipeline
/// step, `metric` the quantity that tripped, `value` its observed size.
class ResourceLimitError : public Error {
 public:
  ResourceLimitError(std::string stage, std::string metric, std::string value)
      : Error("resource limit exceeded in " + stage + ": " + metric + " = " + value),
        stage_(std::move(stage)),
        metric_(std::move(metric)),
        value_(std::move(value)) {}

  const char* code() const noexcept override { return "resource_limit"; }
  const std::string& stage() const noexcept { return stage_; }
  const std::string& metric() const noexcept { return metric_; }
  const std::string& value() const noexcept { return value_; }

 private:
  std::string stage_;
  std::string metric_;
  std::string value_;
};

}  // namespace semilinear
