#pragma once

#include <stdexcept>

namespace arrzeta {

/// Raised for malformed input and violated preconditions. The message names
/// the invariant that failed.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace arrzeta
