#pragma once

#include <stdexcept>
#include <string>

namespace hatgame {

// Bad arguments: out-of-range digits, unnormalized probabilities, malformed
// files. Maps to CLI exit status 1.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed artifact file. Message carries line/field diagnostics.
class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Request too large for exhaustive search. Maps to exit status 2.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal consistency failure, i.e. a bug. Maps to exit status 3.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Dominance analysis could neither certify nor refute some pattern.
class IncompletenessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hatgame
