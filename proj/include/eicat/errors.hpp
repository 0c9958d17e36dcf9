#pragma once

#include <stdexcept>
#include <string>

namespace eicat {

/// Input violates an operation's hypothesis (non-EI, non-free, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed identity that must hold failed; indicates a library bug.
class InternalAssertion : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace eicat
