#pragma once

#include <stdexcept>
#include <string>

namespace coverplan {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unreadable or malformed input files, invalid configuration values.
struct InputError : Error {
  using Error::Error;
};

// The building is absent at a requested ring altitude (empty slice or no
// usable contour), or the model has zero height.
struct EmptySliceError : Error {
  using Error::Error;
};

// Trajectory violates vehicle limits and period adjustment is disabled.
struct InfeasibleError : Error {
  using Error::Error;
};

// Simulation state became non-finite.
struct DivergenceError : Error {
  using Error::Error;
};

}  // namespace coverplan
