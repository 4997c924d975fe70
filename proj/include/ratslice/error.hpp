#pragma once

#include <stdexcept>
#include <string>

namespace ratslice {

// Malformed input or a violated precondition. The message names the field.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A structural invariant failed on data that was well-formed.
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ratslice
