#pragma once

#include <stdexcept>

namespace rigid {

// Malformed input: bad vertex labels, violated family parameters, unparsable files.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that fails an operation's precondition, e.g. a
// disconnected graph handed to diameter().
class PreconditionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rigid
