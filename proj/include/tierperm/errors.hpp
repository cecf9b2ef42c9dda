#pragma once

#include <stdexcept>

namespace tierperm {

/// Raised when a requested exhaustive search exceeds its configured cap.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tierperm
