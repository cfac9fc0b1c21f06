#pragma once

#include <stdexcept>

namespace eegdrive {

// Error taxonomy maps onto the CLI exit codes: schema/data 3, training 4,
// I/O 5. ValidationError covers precondition violations on library calls.

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TrainingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace eegdrive
