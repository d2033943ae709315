#pragma once

#include <stdexcept>
#include <string>

namespace mbkit {

// Malformed or inconsistent input data (bad JSON, invariant violations,
// unknown names). The CLI maps this to exit code 2. A verification that runs
// to completion and fails is *not* an error: it is reported as data and maps
// to exit code 1.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mbkit
