#pragma once

#include <stdexcept>
#include <string>

namespace fsl {

inline constexpr const char* kArtifactVersion = "0.1.0";

// Canonical basis enumeration order is a public contract; bump on any change.
inline constexpr const char* kBasisOrderVersion = "fsl-basis-1";

/// Bad user input: configs, malformed matrices, incompatible cutoffs.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerical contract violation: failed self-check, non-converged solve.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fsl
