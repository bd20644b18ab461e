#pragma once

#include <stdexcept>
#include <string>

namespace hamrecon {

/// Raised when user-supplied parameters violate a documented precondition.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hamrecon
