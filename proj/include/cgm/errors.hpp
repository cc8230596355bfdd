#pragma once

#include <stdexcept>
#include <string>

namespace cgm {

// Input could not be parsed or violates a documented precondition.
struct precondition_error : std::invalid_argument {
  explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// A desk-scale resource guard tripped (instance too large, orbit cap, ...).
struct guard_error : std::runtime_error {
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cgm
