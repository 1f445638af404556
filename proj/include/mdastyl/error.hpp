#pragma once

#include <stdexcept>
#include <string>

namespace mdastyl {

/// Bad configuration: registry, rule table, reference data, CLI options.
/// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad or unusable input data. The CLI maps this to exit code 3.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A persisted file (corpus, model, machine output) does not parse.
class FormatError : public DataError {
 public:
  using DataError::DataError;
};

/// A statistic is undefined for the given samples.
class UndefinedStatistic : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace mdastyl
