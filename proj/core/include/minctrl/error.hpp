#ifndef MINCTRL_ERROR_HPP
#define MINCTRL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace minctrl {

// Caller handed us something that violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration oracle was asked to search beyond its size guard.
class GuardExceeded : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Floating-point backend failed (eigensolver or SVD did not converge).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A post-condition that must hold by construction did not.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace minctrl

#endif  // MINCTRL_ERROR_HPP
