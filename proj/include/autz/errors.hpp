#pragma once

#include <stdexcept>
#include <string>

namespace autz {

// Raised when an operation is called outside its documented domain.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class not_involution_error : public precondition_error {
 public:
  not_involution_error() : precondition_error("not an involution") {}
};

}  // namespace autz
